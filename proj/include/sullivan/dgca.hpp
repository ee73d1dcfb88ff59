#pragma once

// Free differential graded-commutative algebras (Lambda V, d), with d given on
// generators and extended by the Leibniz rule.

#include <optional>
#include <string>
#include <vector>

#include "sullivan/errors.hpp"
#include "sullivan/format.hpp"
#include "sullivan/gca.hpp"

namespace sullivan {

struct FreeDGCA {
  GeneratorSet gens;
  std::vector<Element> differential;  // indexed by generator id
  int truncation = 0;

  const Element& d(GenId g) const { return differential.at(g); }
};

namespace detail {

/// Leibniz rule on a single monomial, no truncation check.
inline Element d_monomial(const GeneratorSet& gens, const std::vector<Element>& d,
                          const Monomial& m) {
  Element out;
  const auto& fs = m.factors();
  int prefix_degree = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& f = fs[i];
    const Element& dg = d.at(f.gen);
    if (!dg.is_zero()) {
      // prefix * g^(e-1) is already sorted; g^(e-1) is even or empty
      std::vector<Factor> left(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(i));
      if (f.exponent > 1) left.push_back({f.gen, f.exponent - 1});
      std::vector<Factor> right(fs.begin() + static_cast<std::ptrdiff_t>(i) + 1, fs.end());
      Element t = multiply(gens, Monomial::from_sorted(std::move(left)), dg);
      t = multiply(gens, t, Element(Monomial::from_sorted(std::move(right)), Scalar(1)));
      Scalar coeff(static_cast<long>(f.exponent));
      // sign from moving d past the prefix
      if (prefix_degree % 2 != 0) coeff = -coeff;
      out += coeff * t;
    }
    prefix_degree += gens[f.gen].degree * static_cast<int>(f.exponent);
  }
  return out;
}

inline Element d_element(const GeneratorSet& gens, const std::vector<Element>& d,
                         const Element& x) {
  Element out;
  for (const auto& [m, c] : x.terms()) out += c * d_monomial(gens, d, m);
  return out;
}

}  // namespace detail

/// d extended to all of Lambda V as a degree +1 derivation.
inline Element d_extend(const FreeDGCA& D, const Element& x) {
  if (x.is_zero()) return x;
  const auto deg = x.degree(D.gens);
  if (!deg) throw InputError("d_extend: inhomogeneous element");
  if (*deg > D.truncation) {
    throw TruncationError("d_extend: degree " + std::to_string(*deg) + " exceeds truncation " +
                          std::to_string(D.truncation));
  }
  return detail::d_element(D.gens, D.differential, x);
}

struct DSquaredFailure {
  GenId generator;
  Element residue;  // d(d(generator))
};

/// Checks d(d(g)) = 0 on every generator; returns the first failure.
inline std::optional<DSquaredFailure> verify_d_squared(const FreeDGCA& D) {
  for (GenId g = 0; g < D.gens.size(); ++g) {
    Element dd = detail::d_element(D.gens, D.differential, D.d(g));
    if (!dd.is_zero()) return DSquaredFailure{g, std::move(dd)};
  }
  return std::nullopt;
}

/// Structural checks: one differential per generator, each homogeneous of
/// degree |g| + 1.  Returns one message per problem.
inline std::vector<std::string> check_dgca(const FreeDGCA& D) {
  std::vector<std::string> out;
  if (D.differential.size() != D.gens.size()) {
    out.push_back("differential count does not match generator count");
    return out;
  }
  for (GenId g = 0; g < D.gens.size(); ++g) {
    const auto& dg = D.d(g);
    if (dg.is_zero()) continue;
    auto deg = dg.degree(D.gens);
    if (!deg || *deg != D.gens[g].degree + 1) {
      out.push_back("d(" + D.gens[g].name + ") is not homogeneous of degree " +
                    std::to_string(D.gens[g].degree + 1));
    }
  }
  return out;
}

/// True when every d(generator) has no linear part.
inline bool is_minimal(const FreeDGCA& D) {
  for (const auto& dg : D.differential) {
    for (const auto& [m, c] : dg.terms()) {
      if (m.word_length() < 2) return false;
    }
  }
  return true;
}

}  // namespace sullivan
