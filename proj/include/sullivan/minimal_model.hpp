#pragma once

// Bigraded minimal Sullivan model of a presented algebra (A, 0), built degree
// by degree through a truncation N.
//
// For each degree m = 2..N:
//   * stage-0 generators of degree m lift a basis of the indecomposables of
//     A^m (d = 0, rho = lift);
//   * generators of degree m and stage k >= 1 kill the kernel of
//     rho*: H^(m+1) -> A^(m+1), taking first the classes representable in
//     Lambda(V_0 + ... + V_(k-1)), stage by stage.
//
// New differentials are canonical cocycles reduced modulo the coboundaries
// already present.  Since Lambda(V_0) monomials lead the column order, the
// reduced cocycles have no pure Lambda(V_0) component from stage 2 on, so
// the construction yields a standard lower gradation directly.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sullivan/cohomology.hpp"
#include "sullivan/dgca.hpp"
#include "sullivan/errors.hpp"
#include "sullivan/format.hpp"
#include "sullivan/gca.hpp"
#include "sullivan/linalg.hpp"
#include "sullivan/presented_algebra.hpp"

namespace sullivan {

/// Preferred generator: when its differential is a valid new target at the
/// point the construction reaches its degree, it is used before any
/// canonical choice.  Used to reproduce hand-computed tables with their names.
struct ModelSeed {
  std::string name;
  int degree = 0;
  std::string differential;
  int line = 1;  // where the differential text came from, for parse errors
  int column = 1;
};

struct BigradedModel {
  FreeDGCA dgca;
  std::vector<Element> rho;  // per generator: element of A in normal form
  PresentedAlgebra algebra;

  int truncation() const { return dgca.truncation; }
  const GeneratorSet& generators() const { return dgca.gens; }
  const Element& d(GenId g) const { return dgca.d(g); }
};

/// rho applied to an element of Lambda V: the algebra map sending each
/// generator to its rho-value, reduced in A.
inline Element rho_of(const BigradedModel& M, const Element& x) {
  const auto& A = M.algebra;
  Element out;
  for (const auto& [m, c] : x.terms()) {
    Element acc = Element::unit();
    for (const auto& f : m.factors()) {
      const Element& r = M.rho.at(f.gen);
      if (r.is_zero()) {
        acc = Element();
        break;
      }
      for (std::uint32_t e = 0; e < f.exponent; ++e) acc = multiply(A.generators(), acc, r);
    }
    out += c * acc;
  }
  return out.is_zero() ? out : A.reduce(out);
}

namespace detail {

class ModelBuilder {
 public:
  ModelBuilder(const PresentedAlgebra& a, int truncation, const std::vector<ModelSeed>& seeds)
      : a_(a), truncation_(truncation) {
    for (const auto& s : seeds) {
      if (s.degree < 2 || s.degree > truncation) {
        throw InputError("named generator '" + s.name + "' has degree " +
                         std::to_string(s.degree) + " outside 2.." +
                         std::to_string(truncation));
      }
      seeds_[s.degree].push_back(s);
    }
  }

  BigradedModel run() {
    for (int m = 2; m <= truncation_; ++m) {
      add_stage0(m);
      kill_kernel(m);
    }
    BigradedModel out;
    out.dgca = FreeDGCA{std::move(gens_), std::move(d_), truncation_};
    out.rho = std::move(rho_);
    out.algebra = a_;
    return out;
  }

 private:
  GenId add(Generator g, Element dg, Element rho) {
    const GenId id = gens_.add(std::move(g));
    d_.push_back(std::move(dg));
    rho_.push_back(std::move(rho));
    return id;
  }

  void add_stage0(int m) {
    const auto ind = indecomposables(a_, m);
    for (std::size_t i = 0; i < ind.dimension(); ++i) {
      add({a_.generators()[ind.generators[i]].name, m, 0, 0}, Element(), ind.lifts[i]);
    }
  }

  Vector rho_coordinates(const Monomial& mono, int t) const {
    Element acc = Element::unit();
    for (const auto& f : mono.factors()) {
      const Element& r = rho_.at(f.gen);
      if (r.is_zero()) return Vector(a_.dimension(t));
      for (std::uint32_t e = 0; e < f.exponent; ++e) acc = multiply(a_.generators(), acc, r);
    }
    return a_.coordinates(t, acc);
  }

  std::string fill_name(int m, int stage) const {
    int count = 0;
    for (const auto& g : gens_.all()) {
      if (g.degree == m && g.stage == stage) ++count;
    }
    return "v" + std::to_string(m) + "_s" + std::to_string(stage) + "_" + std::to_string(count + 1);
  }

  // Adds the generators of degree m and positive stage.
  void kill_kernel(int m) {
    const int t = m + 1;
    const DegreeBasis target(monomial_basis(gens_, t));
    const std::size_t dim_a = a_.dimension(t);

    // kernel of (d, rho) on degree t, rows grouped by maximal stage
    std::map<Monomial, std::size_t> above;
    KernelTracker tracker;
    std::vector<std::pair<int, SparseVector>> kernel;
    int top_stage = 0;
    for (std::size_t i = 0; i < target.size(); ++i) {
      const Monomial& mono = target[i];
      std::vector<SparseVector::Entry> entries;
      const Vector r = rho_coordinates(mono, t);
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (r[j] != 0) entries.emplace_back(j, r[j]);
      }
      const Element dmono = d_monomial(gens_, d_, mono);
      for (const auto& [dm, c] : dmono.terms()) {
        auto [it, fresh] = above.try_emplace(dm, above.size());
        entries.emplace_back(dim_a + it->second, c);
      }
      const int stage = mono.max_stage(gens_);
      top_stage = std::max(top_stage, stage);
      if (auto z = tracker.add(SparseVector::from_entries(std::move(entries)))) {
        kernel.emplace_back(stage, std::move(*z));
      }
    }

    Echelon killed;
    for (const auto& mono : monomial_basis(gens_, m)) {
      killed.insert(target.to_vector(d_monomial(gens_, d_, mono)));
    }

    // seed targets and their stages
    std::vector<std::pair<int, std::pair<const ModelSeed*, Element>>> seeded;
    for (const auto& s : seeds_[m]) {
      Element z = parse_element(gens_, s.differential, s.line, s.column);
      if (z.is_zero() || z.degree(gens_) != t) {
        throw InputError("named generator '" + s.name + "': differential must be homogeneous of degree " +
                         std::to_string(t));
      }
      if (!d_element(gens_, d_, z).is_zero()) {
        throw InputError("named generator '" + s.name + "': differential is not a cocycle");
      }
      bool rho_zero = true;
      for (const auto& [mono, c] : z.terms()) {
        (void)c;
        if (mono.word_length() < 2) {
          throw InputError("named generator '" + s.name + "': differential has a linear part");
        }
      }
      Vector r(dim_a);
      for (const auto& [mono, c] : z.terms()) {
        const Vector rc = rho_coordinates(mono, t);
        for (std::size_t j = 0; j < r.size(); ++j) r[j] += c * rc[j];
      }
      for (const auto& x : r) rho_zero = rho_zero && x == 0;
      if (!rho_zero) {
        throw InputError("named generator '" + s.name + "': differential is not in the kernel of rho");
      }
      seeded.push_back({max_stage(gens_, z) + 1, {&s, std::move(z)}});
    }

    for (int k = 1; k <= top_stage + 1; ++k) {
      for (auto& [stage, seed] : seeded) {
        if (stage != k) continue;
        const SparseVector v = target.to_vector(seed.second);
        if (!killed.insert(v)) {
          throw InputError("named generator '" + seed.first->name +
                           "': differential is already a coboundary modulo earlier generators");
        }
        add({seed.first->name, m, k, 0}, seed.second, Element());
      }
      Echelon fresh;
      for (const auto& [stage, z] : kernel) {
        if (stage <= k - 1) fresh.insert(killed.reduce(z));
      }
      for (const auto& [pivot, row] : fresh.rows()) {
        killed.insert(row);
        add({fill_name(m, k), m, k, 0}, target.to_element(row), Element());
      }
    }

    for (const auto& [stage, z] : kernel) {
      if (!killed.contains(z)) {
        throw IntegrityError("kernel of rho* in degree " + std::to_string(t) + " was not killed");
      }
    }
  }

  const PresentedAlgebra& a_;
  int truncation_;
  std::map<int, std::vector<ModelSeed>> seeds_;
  GeneratorSet gens_;
  std::vector<Element> d_;
  std::vector<Element> rho_;
};

}  // namespace detail

/// Minimal model of (A, 0) with generators through degree N.  Requires A
/// through degree N + 1.
inline BigradedModel build_minimal_model(const PresentedAlgebra& A, int N,
                                         const std::vector<ModelSeed>& seeds = {}) {
  if (!A.valid()) throw ValidationError(A.problems());
  if (A.generators().empty()) throw InputError("A⁺ = 0; nothing to model");
  if (N < 2) throw InputError("model truncation must be at least 2");
  if (N + 1 > A.truncation()) {
    throw TruncationError("a model through degree " + std::to_string(N) +
                          " needs the algebra through degree " + std::to_string(N + 1) +
                          ", but it is known only through " + std::to_string(A.truncation()));
  }
  return detail::ModelBuilder(A, N, seeds).run();
}

struct StandardnessViolation {
  std::string generator;
  std::string condition;  // "rho" or "pure"
  Element residue;        // rho-value, or the Lambda(V_0) component of d
};

/// Checks rho(V_k) = 0 for k >= 1 and that d of every generator of stage
/// k >= 2 has no pure Lambda(V_0) component.
inline std::vector<StandardnessViolation> verify_standard(const BigradedModel& M) {
  std::vector<StandardnessViolation> out;
  const auto& gens = M.generators();
  for (GenId g = 0; g < gens.size(); ++g) {
    if (gens[g].stage >= 1 && !M.rho.at(g).is_zero()) {
      out.push_back({gens[g].name, "rho", M.rho.at(g)});
    }
    if (gens[g].stage >= 2) {
      Element pure = stage0_component(gens, M.d(g));
      if (!pure.is_zero()) out.push_back({gens[g].name, "pure", std::move(pure)});
    }
  }
  return out;
}

/// Replaces each stage >= 2 generator y whose differential has a pure
/// Lambda(V_0) part u0 by y - s, where s in Lambda(V_0) (x) V_1 has d(s) = u0.
/// Differentials mentioning y are rewritten in the new generators.
inline BigradedModel standardize(const BigradedModel& M) {
  BigradedModel out = M;
  const auto& gens = out.dgca.gens;
  auto& d = out.dgca.differential;
  for (GenId y = 0; y < gens.size(); ++y) {
    if (gens[y].stage < 2) continue;
    const Element pure = stage0_component(gens, d[y]);
    if (pure.is_zero()) continue;

    const int deg = gens[y].degree;
    std::vector<Monomial> candidates;
    for (const auto& mono : monomial_basis(gens, deg)) {
      int stage1 = 0;
      bool ok = true;
      for (const auto& f : mono.factors()) {
        const int s = gens[f.gen].stage;
        if (s == 1) {
          stage1 += static_cast<int>(f.exponent);
        } else if (s != 0) {
          ok = false;
        }
      }
      if (ok && stage1 == 1) candidates.push_back(mono);
    }
    std::vector<Element> images;
    std::map<Monomial, std::size_t> cols;
    auto index = [&](const Element& e) {
      for (const auto& [m, c] : e.terms()) cols.try_emplace(m, cols.size());
    };
    for (const auto& c : candidates) {
      images.push_back(detail::d_monomial(gens, d, c));
      index(images.back());
    }
    index(pure);
    auto dense = [&](const Element& e) {
      Vector v(cols.size());
      for (const auto& [m, c] : e.terms()) v[cols.at(m)] = c;
      return v;
    };
    std::vector<Vector> basis;
    for (const auto& img : images) basis.push_back(dense(img));
    const auto coeffs = solve_in_span(basis, dense(pure));
    if (!coeffs) {
      throw IntegrityError("standardize: the pure part of d(" + gens[y].name +
                           ") is not d of Lambda(V_0) (x) V_1; not a quasi-isomorphic model");
    }
    Element s;
    for (std::size_t j = 0; j < candidates.size(); ++j) s.add_term(candidates[j], (*coeffs)[j]);

    d[y] -= detail::d_element(gens, d, s);
    const std::map<GenId, Element> images_of{{y, Element::generator(y) + s}};
    for (GenId w = 0; w < gens.size(); ++w) {
      if (w == y) continue;
      bool mentions = false;
      for (const auto& [m, c] : d[w].terms()) {
        if (m.exponent_of(y) != 0) mentions = true;
      }
      if (mentions) d[w] = substitute(gens, d[w], images_of);
    }
    // rho(y - s) = rho(y) - rho(s) = 0 since s has a stage-1 factor
  }
  return out;
}

/// Generators of stage k and degree m, in canonical order.
inline std::vector<Generator> stage_slice(const BigradedModel& M, int k, int m) {
  if (m > M.truncation()) throw TruncationError("degree exceeds model truncation");
  std::vector<Generator> out;
  for (const auto& g : M.generators().all()) {
    if (g.stage == k && g.degree == m) out.push_back(g);
  }
  return out;
}

/// The model's cohomology complex.
inline CochainComplex complex_of(const BigradedModel& M) { return CochainComplex(M.dgca); }

}  // namespace sullivan
