#pragma once

// Cohomology of free dgcas and of their one-cell attachment models.
//
// Both are handled by CochainComplex: the cochains of degree m are the
// degree-m monomials of Lambda V, plus one extra basis vector u of degree n
// when a cell is attached.  u multiplies every positive-degree element to
// zero, and d(v) = dv + <v, alpha> u on generators of degree n - 1.
//
// Canonical representatives: a cocycle is reduced modulo the RREF of the
// coboundaries; the RREF of all such normal forms is the class basis.
// When u is present it is the first column, so it is eliminated whenever it
// is cohomologous to an element of Lambda V.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sullivan/dgca.hpp"
#include "sullivan/errors.hpp"
#include "sullivan/format.hpp"
#include "sullivan/gca.hpp"
#include "sullivan/linalg.hpp"

namespace sullivan {

/// Element of Lambda V plus a multiple of the attached class u.
struct Cochain {
  Element lambda;
  Scalar u = 0;

  bool is_zero() const { return lambda.is_zero() && u == 0; }
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

inline std::string to_string(const GeneratorSet& gens, const Cochain& c,
                             const std::string& u_name = "u") {
  if (c.u == 0) return to_string(gens, c.lambda);
  std::string ut;
  const Scalar mag = c.u < 0 ? Scalar(-c.u) : c.u;
  if (mag != 1) ut = mag.get_str() + "*";
  ut += u_name;
  if (c.lambda.is_zero()) return (c.u < 0 ? "-" : "") + ut;
  return to_string(gens, c.lambda) + (c.u < 0 ? " - " : " + ") + ut;
}

/// Basis of one cochain degree; the u vector, when present, has index 0.
class CochainSpace {
 public:
  CochainSpace() = default;
  CochainSpace(int degree, DegreeBasis monomials, bool has_u)
      : degree_(degree), monomials_(std::move(monomials)), has_u_(has_u) {}

  int degree() const { return degree_; }
  bool has_u() const { return has_u_; }
  std::size_t offset() const { return has_u_ ? 1 : 0; }
  std::size_t size() const { return monomials_.size() + offset(); }
  const DegreeBasis& monomials() const { return monomials_; }

  SparseVector to_vector(const Cochain& c) const {
    std::vector<SparseVector::Entry> entries;
    if (c.u != 0) {
      if (!has_u_) throw InputError("u has no component in this degree");
      entries.emplace_back(0, c.u);
    }
    for (const auto& [m, k] : c.lambda.terms()) {
      auto i = monomials_.index_of(m);
      if (!i) throw InputError("monomial outside the cochain degree");
      entries.emplace_back(*i + offset(), k);
    }
    return SparseVector::from_entries(std::move(entries));
  }

  Cochain to_cochain(const SparseVector& v) const {
    Cochain c;
    for (const auto& [i, k] : v.entries()) {
      if (has_u_ && i == 0) {
        c.u = k;
      } else {
        c.lambda.add_term(monomials_[i - offset()], k);
      }
    }
    return c;
  }

 private:
  int degree_ = 0;
  DegreeBasis monomials_;
  bool has_u_ = false;
};

struct CohomologyClass {
  int degree = 0;
  Cochain representative;  // canonical cocycle
  Vector coordinates;      // in the canonical basis of H^degree

  bool is_zero() const {
    for (const auto& c : coordinates) {
      if (c != 0) return false;
    }
    return true;
  }
};

/// H^m together with everything needed to express cocycles in its basis.
class CohomologyDegree {
 public:
  int degree() const { return space_.degree(); }
  std::size_t dimension() const { return reps_.size(); }
  const CochainSpace& space() const { return space_; }
  const Echelon& boundaries() const { return boundaries_; }
  const std::vector<CohomologyClass>& classes() const { return classes_; }
  std::size_t cocycle_dimension() const { return cocycle_dim_; }

  /// Coordinates of a cocycle; throws when the vector is not a cocycle.
  Vector coordinates(const SparseVector& cocycle) const {
    const SparseVector nf = boundaries_.reduce(cocycle);
    Vector coords(reps_.size());
    SparseVector check;
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      coords[i] = nf.at(pivots_[i]);
      check.add_scaled(reps_[i], coords[i]);
    }
    if (!(check == nf)) throw InputError("not a cocycle in degree " + std::to_string(degree()));
    return coords;
  }

  Vector coordinates(const Cochain& c) const { return coordinates(space_.to_vector(c)); }

  bool is_boundary(const Cochain& c) const { return boundaries_.contains(space_.to_vector(c)); }

  CohomologyClass make_class(const Vector& coords) const {
    CohomologyClass out;
    out.degree = degree();
    out.coordinates = coords;
    SparseVector rep;
    for (std::size_t i = 0; i < reps_.size(); ++i) rep.add_scaled(reps_[i], coords.at(i));
    out.representative = space_.to_cochain(rep);
    return out;
  }

 private:
  friend class CochainComplex;

  CochainSpace space_;
  Echelon boundaries_;
  std::vector<SparseVector> reps_;
  std::vector<std::size_t> pivots_;
  std::vector<CohomologyClass> classes_;
  std::size_t cocycle_dim_ = 0;
};

struct ClassProduct {
  int left_degree = 0;
  std::size_t left = 0;   // index into the H^left_degree basis
  std::size_t right = 0;  // index into the H^(m - left_degree) basis
  Vector coordinates;     // of the product in H^m
};

/// Span of all products of positive-degree classes landing in H^m.
struct DecomposableSubspace {
  int degree = 0;
  std::vector<ClassProduct> products;  // every basis pair, in (left degree, left, right) order
  std::vector<Vector> basis;           // RREF basis of the span, in H^m coordinates

  std::size_t dimension() const { return basis.size(); }

  bool contains(const Vector& coords) const {
    return solve_in_span(basis, coords).has_value();
  }
};

class CochainComplex {
 public:
  /// Cochains of (Lambda V, d) through degree truncation + 1.
  CochainComplex(const GeneratorSet& gens, const std::vector<Element>& d, int truncation)
      : gens_(&gens), d_(&d), truncation_(truncation) {}

  /// Same, with a cell of dimension `cell` attached along `pairing` (indexed
  /// by generator id; nonzero only on generators of degree cell - 1).
  CochainComplex(const GeneratorSet& gens, const std::vector<Element>& d, int truncation,
                 int cell, Vector pairing)
      : gens_(&gens), d_(&d), truncation_(truncation), cell_(cell), pairing_(std::move(pairing)) {}

  explicit CochainComplex(const FreeDGCA& D) : CochainComplex(D.gens, D.differential, D.truncation) {}

  const GeneratorSet& generators() const { return *gens_; }
  int truncation() const { return truncation_; }
  int cell() const { return cell_; }

  /// Monomials in descending basis order, so elimination pivots on the
  /// highest stages first and representatives stay in the lowest ones.
  CochainSpace space(int m) const {
    auto monos = monomial_basis(*gens_, m);
    std::reverse(monos.begin(), monos.end());
    return CochainSpace(m, DegreeBasis(std::move(monos)), cell_ > 0 && m == cell_);
  }

  Cochain d(const Cochain& x) const {
    Cochain out;
    out.lambda = detail::d_element(*gens_, *d_, x.lambda);
    if (cell_ > 0) {
      for (const auto& [m, c] : x.lambda.terms()) {
        if (m.factors().size() == 1 && m.factors()[0].exponent == 1) {
          out.u += c * pairing_.at(m.factors()[0].gen);
        }
      }
    }
    return out;
  }

  Cochain multiply(const Cochain& x, const Cochain& y) const {
    // u * (positive degree) = 0 and u * u = 0; u * 1 = u
    Cochain out;
    out.lambda = sullivan::multiply(*gens_, x.lambda, y.lambda);
    out.u = x.u * y.lambda.coefficient(Monomial()) + y.u * x.lambda.coefficient(Monomial());
    return out;
  }

  CohomologyDegree cohomology(int m) const {
    if (m > truncation_) {
      throw TruncationError("cohomology in degree " + std::to_string(m) +
                            " needs truncation at least " + std::to_string(m));
    }
    CohomologyDegree h;
    h.space_ = space(m);
    if (m < 0) return h;
    const CochainSpace below = space(m - 1);
    const CochainSpace above = space(m + 1);

    for (std::size_t i = 0; i < below.size(); ++i) {
      h.boundaries_.insert(h.space_.to_vector(d(below.to_cochain(SparseVector::unit(i)))));
    }
    KernelTracker kernel;
    Echelon normal_forms;
    for (std::size_t i = 0; i < h.space_.size(); ++i) {
      auto z = kernel.add(above.to_vector(d(h.space_.to_cochain(SparseVector::unit(i)))));
      if (z) {
        ++h.cocycle_dim_;
        normal_forms.insert(h.boundaries_.reduce(*z));
      }
    }
    // classes listed in ascending monomial order of their pivots
    for (auto it = normal_forms.rows().rbegin(); it != normal_forms.rows().rend(); ++it) {
      h.pivots_.push_back(it->first);
      h.reps_.push_back(it->second);
    }
    for (std::size_t i = 0; i < h.reps_.size(); ++i) {
      Vector coords(h.reps_.size());
      coords[i] = 1;
      h.classes_.push_back(h.make_class(coords));
    }
    return h;
  }

  /// Products of all basis pairs of H^p x H^(m-p), 0 < p < m, and their span.
  DecomposableSubspace decomposables(int m) const {
    std::vector<CohomologyDegree> hs;
    for (int p = 0; p <= m; ++p) hs.push_back(cohomology(p));
    return decomposables(m, hs);
  }

  /// As above, reusing cohomology already computed for degrees 0..m.
  DecomposableSubspace decomposables(int m, const std::vector<CohomologyDegree>& hs) const {
    DecomposableSubspace out;
    out.degree = m;
    const auto& target = hs.at(static_cast<std::size_t>(m));
    std::vector<Vector> spanning;
    for (int p = 1; p < m; ++p) {
      const auto& left = hs.at(static_cast<std::size_t>(p));
      const auto& right = hs.at(static_cast<std::size_t>(m - p));
      for (std::size_t i = 0; i < left.dimension(); ++i) {
        for (std::size_t j = 0; j < right.dimension(); ++j) {
          const Cochain prod = multiply(left.classes()[i].representative,
                                        right.classes()[j].representative);
          ClassProduct cp{p, i, j, target.coordinates(prod)};
          spanning.push_back(cp.coordinates);
          out.products.push_back(std::move(cp));
        }
      }
    }
    if (!spanning.empty() && target.dimension() > 0) {
      const auto r = rref(Matrix::from_rows(spanning, target.dimension()));
      for (std::size_t i = 0; i < r.pivots.size(); ++i) out.basis.push_back(r.reduced.row(i));
    }
    return out;
  }

 private:
  const GeneratorSet* gens_;
  const std::vector<Element>* d_;
  int truncation_;
  int cell_ = 0;
  Vector pairing_;
};

/// H^m(D): dimension and canonical class basis.
inline CohomologyDegree cohomology(const FreeDGCA& D, int m) {
  return CochainComplex(D).cohomology(m);
}

/// Class of the product of representatives, in canonical form.
inline CohomologyClass class_product(const FreeDGCA& D, const CohomologyClass& a,
                                     const CohomologyClass& b) {
  const CochainComplex c(D);
  const int m = a.degree + b.degree;
  const auto h = c.cohomology(m);
  return h.make_class(h.coordinates(c.multiply(a.representative, b.representative)));
}

inline DecomposableSubspace decomposable_subspace(const FreeDGCA& D, int m) {
  if (m > D.truncation) {
    throw TruncationError("decomposables in degree " + std::to_string(m) + " exceed truncation");
  }
  return CochainComplex(D).decomposables(m);
}

}  // namespace sullivan
