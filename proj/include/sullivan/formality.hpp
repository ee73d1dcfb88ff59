#pragma once

// Formality decisions for a one-cell attachment Y = X with an n-cell along
// alpha, where X is formal with cohomology A and standard model M:
//
//   alpha = 0 in pi (x) Q                      -> Formal   ("torsion")
//   alpha pairs nonzero with V_0^(n-1)         -> Inconclusive ("hurewicz-nonvanishing")
//   u indecomposable                           -> NotFormal ("indecomposable")
//   u decomposable, alpha special              -> Formal   ("special-decomposable")
//   u decomposable, alpha not special          -> Inconclusive ("non-special-decomposable")
//
// Special means alpha vanishes on every V_k^(n-1) with k != 1.

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sullivan/attachment.hpp"
#include "sullivan/errors.hpp"
#include "sullivan/format.hpp"
#include "sullivan/minimal_model.hpp"

namespace sullivan {

enum class Status { Formal, NotFormal, Inconclusive };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Formal:
      return "Formal";
    case Status::NotFormal:
      return "NotFormal";
    case Status::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

/// Process exit code for a verdict status.
inline int exit_code(Status s) {
  switch (s) {
    case Status::Formal:
      return 0;
    case Status::NotFormal:
      return 10;
    case Status::Inconclusive:
      return 20;
  }
  return 70;
}

struct FormalityVerdict {
  Status status = Status::Inconclusive;
  std::string clause;
  std::string summary;  // one line for humans
  nlohmann::json witness = nlohmann::json::object();
  std::vector<std::string> assumptions;

  nlohmann::json to_json() const {
    return {{"status", to_string(status)},
            {"clause", clause},
            {"summary", summary},
            {"witness", witness},
            {"assumptions", assumptions}};
  }
};

namespace detail {

inline void require_standard(const BigradedModel& M) {
  const auto v = verify_standard(M);
  if (v.empty()) return;
  std::vector<std::string> problems;
  for (const auto& x : v) {
    problems.push_back("generator " + x.generator + " violates the " + x.condition +
                       " condition of a standard gradation");
  }
  throw ValidationError(problems, "model is not standard");
}

}  // namespace detail

/// Names of the generators in the support of alpha satisfying `pred`, in
/// generator order.
template <typename Pred>
std::vector<std::string> alpha_support(const BigradedModel& M, const AlphaFunctional& alpha,
                                       Pred pred) {
  const Vector pairing = resolve_alpha(M, alpha);
  std::vector<std::string> out;
  const auto& gens = M.generators();
  for (GenId g = 0; g < gens.size(); ++g) {
    if (pairing[g] != 0 && pred(gens[g])) out.push_back(gens[g].name);
  }
  return out;
}

/// True iff alpha vanishes on the stage-0 generators of degree n - 1, i.e.
/// the attaching class lies in the kernel of the rational Hurewicz map.
inline bool hurewicz_vanishes(const BigradedModel& M, const AlphaFunctional& alpha) {
  detail::require_standard(M);
  return alpha_support(M, alpha, [](const Generator& g) { return g.stage == 0; }).empty();
}

struct Specialness {
  bool special = true;
  std::vector<std::string> violators;  // support of alpha outside stage 1
};

inline Specialness is_special(const BigradedModel& M, const AlphaFunctional& alpha) {
  detail::require_standard(M);
  Specialness out;
  out.violators = alpha_support(M, alpha, [](const Generator& g) { return g.stage != 1; });
  out.special = out.violators.empty();
  return out;
}

inline std::vector<std::string> verdict_assumptions() {
  return {"the base algebra is the rational cohomology of a formal simply connected space",
          "specialness is tested against the canonical standard lower gradation built by this tool"};
}

inline FormalityVerdict formality_verdict(const BigradedModel& M, const AlphaFunctional& alpha) {
  detail::require_standard(M);
  const AttachmentModel Ma = build_attachment(M, alpha);
  const auto& gens = M.generators();
  const int n = Ma.cell();

  FormalityVerdict v;
  v.assumptions = verdict_assumptions();
  for (const auto& note : Ma.notices) v.witness["notices"].push_back(note);

  if (Ma.alpha.is_zero()) {
    v.status = Status::Formal;
    v.clause = "torsion";
    v.summary = "alpha is zero in pi (x) Q (torsion attaching class); u is a new indecomposable class";
    v.witness["alpha"] = "zero";
    return v;
  }

  const auto stage0 = alpha_support(M, Ma.alpha, [](const Generator& g) { return g.stage == 0; });
  if (!stage0.empty()) {
    v.status = Status::Inconclusive;
    v.clause = "hurewicz-nonvanishing";
    v.summary = "alpha pairs nonzero with stage-0 generators of degree " + std::to_string(n - 1) +
                ", so its Hurewicz image is nonzero and u = 0";
    v.witness["stage0_support"] = stage0;
    v.witness["u_class_nonzero"] = false;
    v.witness["unmet_hypothesis"] = "Hurewicz image of the attaching class vanishes";
    return v;
  }

  const auto h = attachment_cohomology(Ma, n);
  const auto dec = is_u_decomposable(Ma);
  const std::string u_text = class_to_string(gens, h, dec.u.coordinates);
  v.witness["u_class_nonzero"] = true;
  v.witness["u"] = u_text;
  v.witness["h_n_dimension"] = dec.h_dimension;
  v.witness["decomposable_dimension"] = dec.decomposable_dimension;

  if (!dec.decomposable) {
    v.status = Status::NotFormal;
    v.clause = "indecomposable";
    v.summary = "u = " + u_text + " is a nonzero indecomposable class in H^" + std::to_string(n);
    v.witness["indecomposable"] = true;
    return v;
  }

  const std::string decomposition = decomposition_to_string(gens, dec.witness);
  v.witness["decomposition"] = decomposition;
  const auto spec = is_special(M, Ma.alpha);
  if (spec.special) {
    v.status = Status::Formal;
    v.clause = "special-decomposable";
    v.summary = "alpha is special and u = " + decomposition + " is decomposable";
    v.witness["special"] = true;
    return v;
  }
  v.status = Status::Inconclusive;
  v.clause = "non-special-decomposable";
  v.summary = "u = " + decomposition + " is decomposable but alpha is not special";
  v.witness["special"] = false;
  nlohmann::json violators = nlohmann::json::array();
  for (const auto& name : spec.violators) {
    const auto& g = gens[gens.id_of(name)];
    violators.push_back({{"generator", name}, {"degree", g.degree}, {"stage", g.stage}});
  }
  v.witness["non_special"] = violators;
  v.witness["unmet_hypothesis"] = "alpha vanishes on V_k in degree " + std::to_string(n - 1) +
                                  " for every k != 1";
  return v;
}

}  // namespace sullivan
