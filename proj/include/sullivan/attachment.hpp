#pragma once

// Model of Y = X with one n-cell attached along alpha: the cochains are
// Lambda V plus one class u of degree n, with u * u = 0, u * (positive) = 0
// and d_alpha(v) = dv + <v, alpha> u on generators.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sullivan/cohomology.hpp"
#include "sullivan/errors.hpp"
#include "sullivan/format.hpp"
#include "sullivan/linalg.hpp"
#include "sullivan/minimal_model.hpp"

namespace sullivan {

/// <v, alpha> on the degree-(n-1) generators, keyed by generator name.
/// Generators not listed pair to zero.
struct AlphaFunctional {
  int cell = 0;
  std::map<std::string, Scalar> coefficients;

  bool is_zero() const {
    for (const auto& [name, c] : coefficients) {
      if (c != 0) return false;
    }
    return true;
  }

  AlphaFunctional scaled(const Scalar& f) const {
    AlphaFunctional out{cell, {}};
    for (const auto& [name, c] : coefficients) out.coefficients[name] = c * f;
    return out;
  }
};

struct AttachmentModel {
  BigradedModel base;
  AlphaFunctional alpha;
  Vector pairing;                    // <v, alpha> by generator id
  std::vector<std::string> notices;  // e.g. the 2-cell coercion

  int cell() const { return alpha.cell; }
  int truncation() const { return base.truncation(); }
  const GeneratorSet& generators() const { return base.generators(); }

  CochainComplex complex() const {
    return CochainComplex(base.dgca.gens, base.dgca.differential, base.truncation(), alpha.cell,
                          pairing);
  }
};

/// Pairing vector of alpha against the model's generators; every problem
/// (unknown name, wrong degree) is reported at once.
inline Vector resolve_alpha(const BigradedModel& M, const AlphaFunctional& alpha) {
  const auto& gens = M.generators();
  Vector pairing(gens.size());
  std::vector<std::string> unknown;
  std::vector<std::string> problems;
  for (const auto& [name, c] : alpha.coefficients) {
    const auto id = gens.find(name);
    if (!id) {
      unknown.push_back(name);
      continue;
    }
    if (gens[*id].degree != alpha.cell - 1) {
      problems.push_back("alpha is keyed on '" + name + "' of degree " +
                         std::to_string(gens[*id].degree) + "; only degree " +
                         std::to_string(alpha.cell - 1) + " generators pair with a " +
                         std::to_string(alpha.cell) + "-cell");
      continue;
    }
    pairing[*id] = c;
  }
  if (!unknown.empty()) {
    std::string msg = "unknown generator names in alpha:";
    for (const auto& u : unknown) msg += " " + u;
    problems.insert(problems.begin(), msg);
  }
  if (!problems.empty()) throw ValidationError(problems, "invalid attachment functional");
  return pairing;
}

inline AttachmentModel build_attachment(const BigradedModel& M, AlphaFunctional alpha) {
  if (alpha.cell < 2) throw InputError("cell dimension must be at least 2");
  if (alpha.cell > M.truncation()) {
    throw TruncationError("a " + std::to_string(alpha.cell) + "-cell needs model truncation at least " +
                          std::to_string(alpha.cell) + " (have " +
                          std::to_string(M.truncation()) + ")");
  }
  AttachmentModel out;
  out.base = M;
  if (alpha.cell == 2 && !alpha.coefficients.empty()) {
    // pi_1 = 0, so a 2-cell is attached along a null class
    out.notices.push_back("2-cell: the attaching class is zero in a simply connected space; using alpha = 0");
    alpha.coefficients.clear();
  }
  out.pairing = resolve_alpha(M, alpha);
  out.alpha = std::move(alpha);

  const CochainComplex c = out.complex();
  for (GenId g = 0; g < M.generators().size(); ++g) {
    const Cochain dd = c.d(c.d(Cochain{Element::generator(g), 0}));
    if (!dd.is_zero()) {
      throw IntegrityError("d_alpha^2 is nonzero on " + M.generators()[g].name);
    }
  }
  return out;
}

inline CohomologyDegree attachment_cohomology(const AttachmentModel& Ma, int m) {
  return Ma.complex().cohomology(m);
}

/// The class of u in H^n; zero exactly when some cocycle hits u.
inline CohomologyClass u_class(const AttachmentModel& Ma) {
  const auto h = attachment_cohomology(Ma, Ma.cell());
  return h.make_class(h.coordinates(Cochain{Element(), 1}));
}

/// One term c * [left] * [right] of a decomposition of u.
struct DecompositionTerm {
  Scalar coefficient;
  CohomologyClass left;
  CohomologyClass right;
};

struct Decomposability {
  bool decomposable = false;
  CohomologyClass u;
  std::size_t h_dimension = 0;             // dim H^n
  std::size_t decomposable_dimension = 0;  // dim of the product span in H^n
  std::vector<DecompositionTerm> witness;  // empty unless decomposable
};

/// Renders a class as a combination of bracketed canonical representatives.
inline std::string class_to_string(const GeneratorSet& gens, const CohomologyDegree& h,
                                   const Vector& coords) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    const bool neg = coords[i] < 0;
    const Scalar mag = neg ? Scalar(-coords[i]) : coords[i];
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "[" + to_string(gens, h.classes()[i].representative) + "]";
  }
  return out.empty() ? "0" : out;
}

inline std::string decomposition_to_string(const GeneratorSet& gens,
                                           const std::vector<DecompositionTerm>& terms) {
  std::string out;
  for (const auto& t : terms) {
    const bool neg = t.coefficient < 0;
    const Scalar mag = neg ? Scalar(-t.coefficient) : t.coefficient;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "[" + to_string(gens, t.left.representative) + "]*[" +
           to_string(gens, t.right.representative) + "]";
  }
  return out.empty() ? "0" : out;
}

/// Whether u lies in the span of products of positive-degree classes.  The
/// witness uses the first products (in (left degree, left, right) order)
/// that suffice.
inline Decomposability is_u_decomposable(const AttachmentModel& Ma) {
  const CochainComplex c = Ma.complex();
  const int n = Ma.cell();
  std::vector<CohomologyDegree> hs;
  for (int p = 0; p <= n; ++p) hs.push_back(c.cohomology(p));
  const auto& hn = hs.back();

  Decomposability out;
  out.u = hn.make_class(hn.coordinates(Cochain{Element(), 1}));
  if (out.u.is_zero()) throw InputError("u = 0 in H^" + std::to_string(n) + "; decomposability is undefined");
  out.h_dimension = hn.dimension();

  const auto dec = c.decomposables(n, hs);
  out.decomposable_dimension = dec.dimension();
  std::vector<Vector> spanning;
  for (const auto& p : dec.products) spanning.push_back(p.coordinates);
  if (spanning.empty()) return out;
  const auto coeffs = solve_in_span(spanning, out.u.coordinates);
  if (!coeffs) return out;
  out.decomposable = true;
  for (std::size_t j = 0; j < dec.products.size(); ++j) {
    if ((*coeffs)[j] == 0) continue;
    const auto& p = dec.products[j];
    const auto& l = hs[static_cast<std::size_t>(p.left_degree)];
    const auto& r = hs[static_cast<std::size_t>(n - p.left_degree)];
    out.witness.push_back({(*coeffs)[j], l.classes()[p.left], r.classes()[p.right]});
  }
  return out;
}

}  // namespace sullivan
