#pragma once

// Bundled inputs with known answers.  Each one is a job file, so fixtures
// exercise the same parser as user input.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sullivan {

struct Fixture {
  std::string id;
  std::string title;
  std::string notes;     // where the expected answer comes from
  std::string expected;  // verdict status, or "model" when there is no attach section
  std::string job;
};

namespace detail {

inline const char* kWedgeNames = R"(names:
  b1:3 = a1^2
  b2:3 = a2^2
  b3:3 = a3^2
  b12:3 = a1*a2
  b23:3 = a2*a3
  b13:3 = a1*a3
  c12:4 = b1*a2 - a1*b12
  c13:4 = b1*a3 - a1*b13
  c21:4 = b2*a1 - a2*b12
  c23:4 = b2*a3 - a2*b23
  c31:4 = b3*a1 - a3*b13
  c32:4 = b3*a2 - a3*b23
  k12:5 = a2*c12 - a1*c21 + b1*b2
  k23:5 = a3*c23 - a2*c32 + b2*b3
  k13:5 = a3*c13 - a1*c31 + b1*b3
)";

inline const char* kWedgeAlgebra = R"(algebra:
  generators: a1:2, a2:2, a3:2
  relations: a1^2, a2^2, a3^2, a1*a2, a2*a3, a1*a3
)";

}  // namespace detail

inline const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      {"ex3.1",
       "six degree-2 classes a1..a3, x1..x3 with a 6-cell",
       "The a_i span a wedge of three 2-spheres, the x_i a space with x_i^2 = x1*x2*x3 = 0; "
       "alpha pairs to 1 with g12 (stage 3) and with z (dz = x1*x2*x3).  u = -[x1*x2*x3] is "
       "decomposable but alpha is not special, and this space is known not to be formal by a "
       "direct argument outside the criterion, so the verdict must be Inconclusive.",
       "Inconclusive",
       R"(algebra:
  generators: a1:2, a2:2, a3:2, x1:2, x2:2, x3:2
  relations: a1^2, a2^2, a3^2, a1*a2, a2*a3, a1*a3
  relations: x1^2, x2^2, x3^2, x1*x2*x3
  relations: a1*x1, a1*x2, a1*x3, a2*x1, a2*x2, a2*x3, a3*x1, a3*x2, a3*x3
  truncation: 6
names:
  c11:3 = a1^2
  c12:3 = a1*a2
  c13:3 = a1*a3
  c22:3 = a2^2
  c23:3 = a2*a3
  c33:3 = a3^2
  v1:3 = x1^2
  v2:3 = x2^2
  v3:3 = x3^2
  w11:3 = a1*x1
  w12:3 = a1*x2
  w13:3 = a1*x3
  w21:3 = a2*x1
  w22:3 = a2*x2
  w23:3 = a2*x3
  w31:3 = a3*x1
  w32:3 = a3*x2
  w33:3 = a3*x3
  f12:4 = a1*c12 - a2*c11
  f13:4 = a1*c13 - a3*c11
  f21:4 = a2*c12 - a1*c22
  f23:4 = a2*c23 - a3*c22
  f31:4 = a3*c13 - a1*c33
  f32:4 = a3*c23 - a2*c33
  # g_ji = -g_ij, so only i < j
  g12:5 = a2*f12 - a1*f21 - c11*c22
  g13:5 = a3*f13 - a1*f31 - c11*c33
  g23:5 = a3*f23 - a2*f32 - c22*c33
  z:5 = x1*x2*x3
attach:
  cell: 6
  alpha: g12 = 1, z = 1
)"},
      {"ex3.2",
       "wedge of three 2-spheres with a 6-cell along k12",
       "H^6 of the result is spanned by u, which is indecomposable, so the space is not formal.",
       "NotFormal",
       std::string(detail::kWedgeAlgebra) + "  truncation: 6\n" + detail::kWedgeNames +
           "attach:\n  cell: 6\n  alpha: k12 = 1\n"},
      {"wedge3-s2",
       "wedge of three 2-spheres",
       "Model through degree 5: a_i in degree 2 (stage 0), b_i and b_ij in degree 3 (stage 1) with "
       "db_i = a_i^2 and db_ij = a_i*a_j, then c_ij and k_ij among the higher generators.",
       "model",
       std::string(detail::kWedgeAlgebra) + "  truncation: 5\n" + detail::kWedgeNames},
      {"cp1",
       "the 2-sphere, Q[a]/(a^2)",
       "Model a (degree 2), b (degree 3, db = a^2) and nothing else through degree 4.",
       "model",
       R"(algebra:
  generators: a:2
  relations: a^2
  truncation: 4
names:
  b:3 = a^2
)"},
      {"cp2-attach",
       "the 2-sphere with a 4-cell along b, giving the complex projective plane",
       "d_alpha(b) = a^2 + u, so u = -[a]*[a] is decomposable and alpha is special: formal, "
       "with cohomology Q[a]/(a^3).",
       "Formal",
       R"(algebra:
  generators: a:2
  relations: a^2
  truncation: 4
names:
  b:3 = a^2
attach:
  cell: 4
  alpha: b = 1
)"},
      {"even-4k",
       "two 2-spheres with one 4-cell along the Whitehead product (k = 1)",
       "Cohomology generated in degree 2k with cells of dimension at most 4k is formal; the result "
       "is Q[a1,a2]/(a1^2, a2^2) with a1*a2 spanning H^4.",
       "Formal",
       R"(algebra:
  generators: a1:2, a2:2
  relations: a1^2, a2^2
  truncation: 4
attach:
  cell: 4
  alpha: b12 = 1
even:
  k: 1
)"},
  };
  return all;
}

inline const Fixture* find_fixture(std::string_view id) {
  for (const auto& f : fixtures()) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

inline std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

/// Closest fixture id by edit distance.
inline std::string nearest_fixture(std::string_view id) {
  std::string best;
  std::size_t best_d = static_cast<std::size_t>(-1);
  for (const auto& f : fixtures()) {
    const std::size_t d = edit_distance(id, f.id);
    if (d < best_d) {
      best_d = d;
      best = f.id;
    }
  }
  return best;
}

}  // namespace sullivan
