#pragma once

// Finitely presented graded-commutative algebras A = Lambda(generators)/(relations),
// known through a truncation degree.  Each graded piece A^m is the quotient of
// the degree-m monomials by the span of all monomial * relation products of
// degree m; representatives are the non-pivot monomials of that span's RREF.

#include <string>
#include <utility>
#include <vector>

#include "sullivan/errors.hpp"
#include "sullivan/format.hpp"
#include "sullivan/gca.hpp"
#include "sullivan/linalg.hpp"

namespace sullivan {

struct GradedBasis {
  int degree = 0;
  DegreeBasis cover;                          // all degree-m monomials of the free cover
  Echelon ideal;                              // degree-m slice of the relation ideal
  std::vector<std::size_t> representatives;   // cover indices of the non-pivot monomials

  std::size_t dimension() const { return representatives.size(); }
};

struct Indecomposables {
  int degree = 0;
  std::vector<GenId> generators;  // cover generators whose images form the quotient basis
  std::vector<Element> lifts;     // those images, reduced into A^m

  std::size_t dimension() const { return lifts.size(); }
};

class PresentedAlgebra {
 public:
  PresentedAlgebra() = default;

  PresentedAlgebra(GeneratorSet gens, std::vector<Element> relations, int truncation)
      : gens_(std::move(gens)), relations_(std::move(relations)), truncation_(truncation) {
    problems_ = check();
    if (problems_.empty()) {
      for (int m = 0; m <= truncation_; ++m) components_.push_back(compute_component(m));
    }
  }

  /// Convenience: relations given in the element grammar.
  static PresentedAlgebra parse(GeneratorSet gens, const std::vector<std::string>& relations,
                                int truncation) {
    std::vector<Element> rels;
    for (const auto& r : relations) rels.push_back(parse_element(gens, r));
    return PresentedAlgebra(std::move(gens), std::move(rels), truncation);
  }

  const GeneratorSet& generators() const { return gens_; }
  const std::vector<Element>& relations() const { return relations_; }
  int truncation() const { return truncation_; }
  const std::vector<std::string>& problems() const { return problems_; }
  bool valid() const { return problems_.empty(); }

  const GradedBasis& component(int m) const {
    require_valid();
    if (m < 0 || m > truncation_) {
      throw TruncationError("degree " + std::to_string(m) + " exceeds truncation " +
                            std::to_string(truncation_));
    }
    return components_[static_cast<std::size_t>(m)];
  }

  std::size_t dimension(int m) const { return m < 0 ? 0 : component(m).dimension(); }

  /// Normal form of a homogeneous element of the free cover: a combination
  /// of representative monomials.
  Element reduce(const Element& x) const {
    if (x.is_zero()) return x;
    const auto& c = component(homogeneous_degree(gens_, x));
    return c.cover.to_element(c.ideal.reduce(c.cover.to_vector(x)));
  }

  /// Coordinates of x in the representative basis of A^m.
  Vector coordinates(int m, const Element& x) const {
    const auto& c = component(m);
    if (!x.is_zero() && homogeneous_degree(gens_, x) != m) {
      throw InputError("element has the wrong degree");
    }
    const SparseVector r = c.ideal.reduce(c.cover.to_vector(x));
    Vector out(c.dimension());
    for (std::size_t i = 0; i < c.representatives.size(); ++i) out[i] = r.at(c.representatives[i]);
    return out;
  }

  Element from_coordinates(int m, const Vector& coords) const {
    const auto& c = component(m);
    Element out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      out.add_term(c.cover[c.representatives.at(i)], coords[i]);
    }
    return out;
  }

  Element basis_element(int m, std::size_t i) const {
    const auto& c = component(m);
    return Element(c.cover[c.representatives.at(i)], Scalar(1));
  }

 private:
  void require_valid() const {
    if (!problems_.empty()) throw ValidationError(problems_);
  }

  std::vector<std::string> check() const {
    std::vector<std::string> out;
    if (truncation_ < 0) out.push_back("truncation must be nonnegative");
    for (const auto& g : gens_.all()) {
      if (g.degree < 2) {
        out.push_back("generator '" + g.name + "' has degree " + std::to_string(g.degree) +
                      "; degrees must be at least 2");
      }
    }
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      const auto& r = relations_[i];
      const std::string where = "relation " + std::to_string(i + 1);
      if (r.is_zero()) continue;
      auto d = r.degree(gens_);
      if (!d) {
        out.push_back(where + " (" + to_string(gens_, r) + ") is inhomogeneous");
        continue;
      }
      if (*d > truncation_) {
        out.push_back(where + " has degree " + std::to_string(*d) + " above the truncation " +
                      std::to_string(truncation_));
      }
      if (*d == 0) out.push_back(where + " is a nonzero constant");
    }
    return out;
  }

  GradedBasis compute_component(int m) const {
    GradedBasis b;
    b.degree = m;
    b.cover = DegreeBasis(monomial_basis(gens_, m));
    for (const auto& r : relations_) {
      if (r.is_zero()) continue;
      const int d = *r.degree(gens_);
      if (d > m) continue;
      for (const auto& mono : monomial_basis(gens_, m - d)) {
        b.ideal.insert(b.cover.to_vector(multiply(gens_, mono, r)));
      }
    }
    for (std::size_t i = 0; i < b.cover.size(); ++i) {
      if (!b.ideal.is_pivot(i)) b.representatives.push_back(i);
    }
    return b;
  }

  GeneratorSet gens_;
  std::vector<Element> relations_;
  int truncation_ = 0;
  std::vector<std::string> problems_;
  std::vector<GradedBasis> components_;
};

/// Empty when the presentation is usable; otherwise one message per problem.
inline std::vector<std::string> validate_presentation(const PresentedAlgebra& a) {
  return a.problems();
}

inline const GradedBasis& graded_component(const PresentedAlgebra& a, int m) {
  return a.component(m);
}

/// Basis of A^m modulo decomposables, i.e. modulo the span of all products
/// A^p * A^(m-p) with 0 < p < m.  Those products are exactly the images of the
/// cover monomials of word length at least two.
inline Indecomposables indecomposables(const PresentedAlgebra& a, int m) {
  const auto& comp = a.component(m);
  const auto& gens = a.generators();
  Echelon span;
  for (const auto& mono : comp.cover.monomials()) {
    if (mono.word_length() >= 2) span.insert(comp.ideal.reduce(comp.cover.to_vector(Element(mono, 1))));
  }
  Indecomposables out;
  out.degree = m;
  for (GenId g = 0; g < gens.size(); ++g) {
    if (gens[g].degree != m) continue;
    const SparseVector v = comp.ideal.reduce(comp.cover.to_vector(Element::generator(g)));
    if (span.insert(v)) {
      out.generators.push_back(g);
      out.lifts.push_back(comp.cover.to_element(v));
    }
  }
  return out;
}

/// Product in A of two homogeneous elements, reduced to normal form.
inline Element product_in_A(const PresentedAlgebra& a, const Element& x, const Element& y) {
  if (x.is_zero() || y.is_zero()) return {};
  const auto& gens = a.generators();
  const int d = homogeneous_degree(gens, x) + homogeneous_degree(gens, y);
  if (d > a.truncation()) {
    throw TruncationError("product of degree " + std::to_string(d) + " exceeds truncation " +
                          std::to_string(a.truncation()));
  }
  return a.reduce(multiply(gens, x, y));
}

}  // namespace sullivan
