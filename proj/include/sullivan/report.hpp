#pragma once

// Text and JSON renderings of models, attachments and verdicts.  Everything
// printed is a function of the input only, so outputs are byte-stable.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sullivan/attachment.hpp"
#include "sullivan/even_complex.hpp"
#include "sullivan/formality.hpp"
#include "sullivan/format.hpp"
#include "sullivan/minimal_model.hpp"

namespace sullivan {

constexpr int kJsonSchema = 1;

namespace detail {

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

inline std::string pad_left(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

inline std::string pad_right(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

}  // namespace detail

/// Rows "deg | dim | basis", one per degree with generators.
inline std::string render_model_table(const BigradedModel& M) {
  std::map<int, std::vector<std::string>> by_degree;
  for (const auto& g : M.generators().all()) by_degree[g.degree].push_back(g.name);
  std::ostringstream os;
  os << "  deg | dim | basis\n";
  for (const auto& [deg, names] : by_degree) {
    os << "  " << detail::pad_left(std::to_string(deg), 3) << " | "
       << detail::pad_left(std::to_string(names.size()), 3) << " | " << detail::join(names, ", ")
       << "\n";
  }
  return os.str();
}

inline std::string render_generators(const BigradedModel& M) {
  const auto& gens = M.generators();
  std::size_t w = 4;
  for (const auto& g : gens.all()) w = std::max(w, g.name.size());
  std::ostringstream os;
  os << "  " << detail::pad_right("name", w) << " | deg | stage | d | rho\n";
  for (GenId g = 0; g < gens.size(); ++g) {
    os << "  " << detail::pad_right(gens[g].name, w) << " | "
       << detail::pad_left(std::to_string(gens[g].degree), 3) << " | "
       << detail::pad_left(std::to_string(gens[g].stage), 5) << " | " << to_string(gens, M.d(g))
       << " | " << to_string(M.algebra.generators(), M.rho[g]) << "\n";
  }
  return os.str();
}

inline std::vector<std::size_t> model_cohomology_dims(const BigradedModel& M) {
  std::vector<std::size_t> out;
  for (int m = 0; m <= M.truncation(); ++m) out.push_back(cohomology(M.dgca, m).dimension());
  return out;
}

inline std::vector<std::size_t> algebra_dims(const PresentedAlgebra& A, int top) {
  std::vector<std::size_t> out;
  for (int m = 0; m <= top; ++m) out.push_back(A.dimension(m));
  return out;
}

inline std::string dims_to_string(const std::vector<std::size_t>& dims) {
  std::vector<std::string> parts;
  for (auto d : dims) parts.push_back(std::to_string(d));
  return "(" + detail::join(parts, ", ") + ")";
}

inline std::string render_model(const BigradedModel& M, const std::string& source) {
  std::ostringstream os;
  os << "minimal model of " << source << " through degree " << M.truncation() << "\n\n";
  os << render_model_table(M) << "\n";
  os << "generators:\n" << render_generators(M) << "\n";
  const auto h = model_cohomology_dims(M);
  const auto a = algebra_dims(M.algebra, M.truncation());
  os << "dim H^m(model), m = 0.." << M.truncation() << ": " << dims_to_string(h) << "\n";
  os << "dim A^m,        m = 0.." << M.truncation() << ": " << dims_to_string(a) << "\n";
  os << "quasi-isomorphism check: " << (h == a ? "ok" : "FAILED") << "\n";
  const auto v = verify_standard(M);
  os << "standard lower gradation: " << (v.empty() ? "ok" : "violated") << "\n";
  for (const auto& x : v) os << "  " << x.generator << ": " << x.condition << "\n";
  return os.str();
}

inline nlohmann::json model_json(const BigradedModel& M) {
  const auto& gens = M.generators();
  nlohmann::json g = nlohmann::json::array();
  for (GenId i = 0; i < gens.size(); ++i) {
    g.push_back({{"name", gens[i].name},
                 {"degree", gens[i].degree},
                 {"stage", gens[i].stage},
                 {"d", to_string(gens, M.d(i))},
                 {"rho", to_string(M.algebra.generators(), M.rho[i])}});
  }
  std::map<int, std::vector<std::string>> by_degree;
  for (const auto& x : gens.all()) by_degree[x.degree].push_back(x.name);
  nlohmann::json table = nlohmann::json::array();
  for (const auto& [deg, names] : by_degree) {
    table.push_back({{"degree", deg}, {"dimension", names.size()}, {"basis", names}});
  }
  const auto h = model_cohomology_dims(M);
  const auto a = algebra_dims(M.algebra, M.truncation());
  return {{"truncation", M.truncation()},
          {"generators", g},
          {"table", table},
          {"cohomology_dimensions", h},
          {"algebra_dimensions", a},
          {"quasi_isomorphic", h == a},
          {"standard", verify_standard(M).empty()}};
}

inline std::string alpha_to_string(const AlphaFunctional& a) {
  std::vector<std::string> parts;
  for (const auto& [name, c] : a.coefficients) parts.push_back(name + " = " + c.get_str());
  return parts.empty() ? "0" : detail::join(parts, ", ");
}

struct AttachmentReport {
  std::vector<std::size_t> dimensions;  // H^m(M_alpha), m = 0..N
  std::vector<std::size_t> base_dimensions;
  bool u_nonzero = false;
  std::string u_text;
  std::optional<Decomposability> decomposition;
  std::string u_line;
};

inline AttachmentReport attachment_report(const AttachmentModel& Ma) {
  AttachmentReport r;
  const auto& gens = Ma.generators();
  const int n = Ma.cell();
  for (int m = 0; m <= Ma.truncation(); ++m) {
    r.dimensions.push_back(attachment_cohomology(Ma, m).dimension());
  }
  r.base_dimensions = algebra_dims(Ma.base.algebra, Ma.truncation());
  const auto hn = attachment_cohomology(Ma, n);
  const auto u = hn.make_class(hn.coordinates(Cochain{Element(), 1}));
  r.u_nonzero = !u.is_zero();
  r.u_text = class_to_string(gens, hn, u.coordinates);
  if (!r.u_nonzero) {
    r.u_line = "u = 0 (alpha pairs nonzero with a stage-0 generator of degree " +
               std::to_string(n - 1) + ")";
    return r;
  }
  r.decomposition = is_u_decomposable(Ma);
  if (r.decomposition->decomposable) {
    r.u_line = "u = " + r.u_text + " (decomposable)";
  } else if (hn.dimension() == 1) {
    r.u_line = "u spans H^" + std::to_string(n) + ", indecomposable";
  } else {
    r.u_line = "u = " + r.u_text + " (indecomposable)";
  }
  return r;
}

inline std::string render_attachment(const AttachmentModel& Ma, const AttachmentReport& r,
                                     const std::string& source) {
  std::ostringstream os;
  os << "attachment of a " << Ma.cell() << "-cell to " << source << " (model through degree "
     << Ma.truncation() << ")\n";
  os << "alpha: " << alpha_to_string(Ma.alpha) << "\n";
  for (const auto& n : Ma.notices) os << "notice: " << n << "\n";
  os << "\n  deg | dim H(M_alpha) | dim A\n";
  for (std::size_t m = 0; m < r.dimensions.size(); ++m) {
    os << "  " << detail::pad_left(std::to_string(m), 3) << " | "
       << detail::pad_left(std::to_string(r.dimensions[m]), 14) << " | "
       << detail::pad_left(std::to_string(r.base_dimensions[m]), 5) << "\n";
  }
  os << "\n" << r.u_line << "\n";
  if (r.decomposition && r.decomposition->decomposable) {
    os << "decomposition: u = " << decomposition_to_string(Ma.generators(), r.decomposition->witness)
       << "\n";
  }
  return os.str();
}

inline nlohmann::json attachment_json(const AttachmentModel& Ma, const AttachmentReport& r) {
  nlohmann::json alpha = nlohmann::json::object();
  for (const auto& [name, c] : Ma.alpha.coefficients) alpha[name] = c.get_str();
  nlohmann::json j = {{"cell", Ma.cell()},
                      {"truncation", Ma.truncation()},
                      {"alpha", alpha},
                      {"notices", Ma.notices},
                      {"cohomology_dimensions", r.dimensions},
                      {"algebra_dimensions", r.base_dimensions},
                      {"u_nonzero", r.u_nonzero},
                      {"u", r.u_text},
                      {"summary", r.u_line}};
  if (r.decomposition) {
    j["u_decomposable"] = r.decomposition->decomposable;
    if (r.decomposition->decomposable) {
      j["decomposition"] = decomposition_to_string(Ma.generators(), r.decomposition->witness);
    }
  }
  return j;
}

inline std::string render_verdict(const FormalityVerdict& v) {
  std::ostringstream os;
  os << "status: " << to_string(v.status) << "\n";
  os << "clause: " << v.clause << "\n";
  os << v.summary << "\n";
  if (!v.witness.empty()) {
    os << "witness:\n";
    for (const auto& [key, value] : v.witness.items()) {
      os << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
         << "\n";
    }
  }
  if (!v.assumptions.empty()) {
    os << "assumptions:\n";
    for (const auto& a : v.assumptions) os << "  - " << a << "\n";
  }
  return os.str();
}

inline nlohmann::json presentation_json(const PresentedAlgebra& P) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : P.generators().all()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  std::vector<std::string> rels;
  for (const auto& r : P.relations()) rels.push_back(to_string(P.generators(), r));
  return {{"generators", gens}, {"relations", rels}};
}

inline std::string render_presentation(const PresentedAlgebra& P) {
  std::vector<std::string> gens;
  for (const auto& g : P.generators().all()) gens.push_back(g.name + ":" + std::to_string(g.degree));
  std::vector<std::string> rels;
  for (const auto& r : P.relations()) rels.push_back(to_string(P.generators(), r));
  return "  generators: " + detail::join(gens, ", ") + "\n  relations: " +
         (rels.empty() ? std::string("(none)") : detail::join(rels, ", ")) + "\n";
}

inline std::string render_even(const EvenComplexResult& r, const std::string& source) {
  std::ostringstream os;
  os << "even-cell analysis of " << source << " (k = " << r.k << ", cells of dimension " << 4 * r.k
     << ")\n";
  for (const auto& s : r.steps) {
    os << "\ncell " << s.cell_index << ": alpha on the current model: " << alpha_to_string(s.alpha)
       << "\n";
    std::istringstream verdict(render_verdict(s.verdict));
    for (std::string line; std::getline(verdict, line);) os << "  " << line << "\n";
    os << "  dim H^m after the cell: " << dims_to_string(s.dimensions) << "\n";
  }
  os << "\nfinal cohomology presentation:\n" << render_presentation(r.final_presentation);
  os << "  dim H^m, m = 0.." << 4 * r.k << ": " << dims_to_string(r.final_dimensions) << "\n";
  if (!r.input_dimensions.empty()) {
    os << "  given algebra:     " << dims_to_string(r.input_dimensions)
       << (r.input_dimensions ==
                   std::vector<std::size_t>(r.final_dimensions.begin(),
                                            r.final_dimensions.begin() +
                                                static_cast<std::ptrdiff_t>(r.input_dimensions.size()))
               ? " (agrees)"
               : " (differs)")
       << "\n";
  }
  os << "\noverall:\n" << render_verdict(r.overall);
  return os.str();
}

inline nlohmann::json even_json(const EvenComplexResult& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.steps) {
    nlohmann::json alpha = nlohmann::json::object();
    for (const auto& [name, c] : s.alpha.coefficients) alpha[name] = c.get_str();
    steps.push_back({{"cell", s.cell_index},
                     {"alpha", alpha},
                     {"verdict", s.verdict.to_json()},
                     {"cohomology_dimensions", s.dimensions},
                     {"presentation", presentation_json(s.result)}});
  }
  return {{"k", r.k},
          {"steps", steps},
          {"final_presentation", presentation_json(r.final_presentation)},
          {"final_dimensions", r.final_dimensions},
          {"input_dimensions", r.input_dimensions},
          {"generated_in_degree_2k", r.generated_in_degree_2k},
          {"overall", r.overall.to_json()}};
}

}  // namespace sullivan
