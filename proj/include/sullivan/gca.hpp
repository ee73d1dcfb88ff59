#pragma once

// Free graded-commutative algebras: symmetric on even generators, exterior on
// odd ones.  Monomials are kept sorted by generator id with the Koszul sign
// folded into the coefficient, so equal elements compare equal structurally.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "sullivan/errors.hpp"
#include "sullivan/linalg.hpp"

namespace sullivan {

using GenId = std::uint32_t;

struct Generator {
  std::string name;
  int degree = 0;
  int stage = 0;
  int creation = 0;

  bool odd() const { return degree % 2 != 0; }

  /// Global generator order.
  auto order_key() const { return std::tie(degree, stage, creation, name); }
};

/// Ordered collection of generators.  Ids follow the global order
/// (degree, stage, creation index, name).
class GeneratorSet {
 public:
  GeneratorSet() = default;

  /// Sorts the given generators into global order; creation indices are the
  /// input positions.
  explicit GeneratorSet(std::vector<Generator> gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      gens[i].creation = static_cast<int>(i);
    }
    std::stable_sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) {
      return a.order_key() < b.order_key();
    });
    for (auto& g : gens) push(std::move(g));
  }

  /// Appends a generator, which must come after every existing one in the
  /// global order.  Its creation index is assigned here.
  GenId add(Generator g) {
    g.creation = next_creation();
    if (!gens_.empty() && !(gens_.back().order_key() < g.order_key())) {
      throw InputError("generator '" + g.name + "' is out of global order");
    }
    return push(std::move(g));
  }

  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  const Generator& operator[](GenId id) const { return gens_.at(id); }
  const std::vector<Generator>& all() const { return gens_; }

  std::optional<GenId> find(std::string_view name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  GenId id_of(std::string_view name) const {
    if (auto id = find(name)) return *id;
    throw InputError("unknown generator '" + std::string(name) + "'");
  }

  int max_degree() const { return gens_.empty() ? 0 : gens_.back().degree; }

 private:
  int next_creation() const {
    int c = 0;
    for (const auto& g : gens_) c = std::max(c, g.creation + 1);
    return c;
  }

  GenId push(Generator g) {
    if (g.degree < 1) {
      throw InputError("generator '" + g.name + "' must have positive degree");
    }
    if (by_name_.count(g.name)) {
      throw InputError("duplicate generator name '" + g.name + "'");
    }
    const auto id = static_cast<GenId>(gens_.size());
    by_name_.emplace(g.name, id);
    gens_.push_back(std::move(g));
    return id;
  }

  std::vector<Generator> gens_;
  std::map<std::string, GenId, std::less<>> by_name_;
};

struct Factor {
  GenId gen = 0;
  std::uint32_t exponent = 0;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Sign-normalized monomial: factors sorted by generator id, odd generators
/// with exponent one.  The empty monomial is the unit.
class Monomial {
 public:
  Monomial() = default;

  static Monomial generator(GenId g) {
    Monomial m;
    m.factors_.push_back({g, 1});
    return m;
  }

  /// Factors must already be sorted, distinct and nonzero.
  static Monomial from_sorted(std::vector<Factor> factors) {
    Monomial m;
    m.factors_ = std::move(factors);
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }

  std::uint32_t exponent_of(GenId g) const {
    for (const auto& f : factors_) {
      if (f.gen == g) return f.exponent;
    }
    return 0;
  }

  /// Number of generator factors counted with multiplicity.
  int word_length() const {
    int n = 0;
    for (const auto& f : factors_) n += static_cast<int>(f.exponent);
    return n;
  }

  int degree(const GeneratorSet& gens) const {
    int d = 0;
    for (const auto& f : factors_) d += gens[f.gen].degree * static_cast<int>(f.exponent);
    return d;
  }

  int max_stage(const GeneratorSet& gens) const {
    int s = 0;
    for (const auto& f : factors_) s = std::max(s, gens[f.gen].stage);
    return s;
  }

  bool all_stage(const GeneratorSet& gens, int stage) const {
    return std::all_of(factors_.begin(), factors_.end(), [&](const Factor& f) {
      return gens[f.gen].stage == stage;
    });
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Lexicographic order on exponent vectors, larger exponent of the
  /// smaller generator id first: a^2 < a*b < b^2 for a before b.
  friend bool operator<(const Monomial& x, const Monomial& y) {
    const auto& a = x.factors_;
    const auto& b = y.factors_;
    std::size_t i = 0;
    while (i < a.size() && i < b.size()) {
      if (a[i].gen != b[i].gen) return a[i].gen < b[i].gen;
      if (a[i].exponent != b[i].exponent) return a[i].exponent > b[i].exponent;
      ++i;
    }
    return i < a.size() && i == b.size();
  }

 private:
  std::vector<Factor> factors_;
};

struct SignedMonomial {
  int sign = 1;
  Monomial monomial;
};

/// Sorts a product of generators into normal form, tracking the Koszul sign.
/// Returns nullopt when an odd generator repeats (the product vanishes).
inline std::optional<SignedMonomial> normalize_monomial(const GeneratorSet& gens,
                                                        std::span<const GenId> word) {
  std::vector<GenId> w(word.begin(), word.end());
  int sign = 1;
  // insertion sort; each swap of two odd generators flips the sign
  for (std::size_t i = 1; i < w.size(); ++i) {
    for (std::size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
      if (gens[w[j - 1]].odd() && gens[w[j]].odd()) sign = -sign;
      std::swap(w[j - 1], w[j]);
    }
  }
  std::vector<Factor> factors;
  for (GenId g : w) {
    if (!factors.empty() && factors.back().gen == g) {
      if (gens[g].odd()) return std::nullopt;
      ++factors.back().exponent;
    } else {
      factors.push_back({g, 1});
    }
  }
  return SignedMonomial{sign, Monomial::from_sorted(std::move(factors))};
}

/// Product of two normalized monomials with its Koszul sign.
inline std::optional<SignedMonomial> multiply_monomials(const GeneratorSet& gens,
                                                        const Monomial& x,
                                                        const Monomial& y) {
  const auto& a = x.factors();
  const auto& b = y.factors();
  std::vector<Factor> out;
  out.reserve(a.size() + b.size());
  int sign = 1;
  // odd factors of a not yet emitted; each odd factor of b that is emitted
  // before them has to pass across them
  int pending_odd_a = 0;
  for (const auto& f : a) {
    if (gens[f.gen].odd()) ++pending_odd_a;
  }
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].gen < b[j].gen)) {
      if (gens[a[i].gen].odd()) --pending_odd_a;
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].gen < a[i].gen) {
      if (gens[b[j].gen].odd() && pending_odd_a % 2 != 0) sign = -sign;
      out.push_back(b[j++]);
    } else {
      if (gens[a[i].gen].odd()) return std::nullopt;
      out.push_back({a[i].gen, a[i].exponent + b[j].exponent});
      ++i;
      ++j;
    }
  }
  return SignedMonomial{sign, Monomial::from_sorted(std::move(out))};
}

/// Finite rational combination of monomials; zero coefficients never stored.
class Element {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Element() = default;

  static Element unit() { return Element(Monomial(), Scalar(1)); }
  static Element generator(GenId g) { return Element(Monomial::generator(g), Scalar(1)); }

  Element(Monomial m, Scalar c) { add_term(std::move(m), std::move(c)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Element& operator*=(const Scalar& f) {
    if (f == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= f;
    }
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Scalar(-1); }
  friend Element operator*(const Scalar& f, Element a) { return a *= f; }

  friend bool operator==(const Element&, const Element&) = default;

  /// The common degree of all terms, nullopt for zero or inhomogeneous.
  std::optional<int> degree(const GeneratorSet& gens) const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      const int md = m.degree(gens);
      if (d && *d != md) return std::nullopt;
      d = md;
    }
    return d;
  }

  bool is_homogeneous(const GeneratorSet& gens) const {
    return is_zero() || degree(gens).has_value();
  }

 private:
  Terms terms_;
};

inline Element multiply(const GeneratorSet& gens, const Element& x, const Element& y) {
  Element out;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      if (auto p = multiply_monomials(gens, mx, my)) {
        Scalar c = cx * cy;
        if (p->sign != 1) c = -c;
        out.add_term(p->monomial, c);
      }
    }
  }
  return out;
}

inline Element multiply(const GeneratorSet& gens, const Monomial& x, const Element& y) {
  return multiply(gens, Element(x, Scalar(1)), y);
}

/// Degree of a homogeneous element; throws on zero or mixed degrees.
inline int homogeneous_degree(const GeneratorSet& gens, const Element& x) {
  if (x.is_zero()) throw InputError("the zero element has no degree");
  auto d = x.degree(gens);
  if (!d) throw InputError("element is not homogeneous");
  return *d;
}

/// Splits x by word length (factors counted with multiplicity).
inline std::map<int, Element> word_length_split(const Element& x) {
  std::map<int, Element> parts;
  for (const auto& [m, c] : x.terms()) parts[m.word_length()].add_term(m, c);
  return parts;
}

/// Terms of x whose factors are all stage-0 generators (the Lambda(V_0) part).
inline Element stage0_component(const GeneratorSet& gens, const Element& x) {
  Element out;
  for (const auto& [m, c] : x.terms()) {
    if (m.all_stage(gens, 0)) out.add_term(m, c);
  }
  return out;
}

/// Terms of x in which some factor has positive stage.
inline Element positive_stage_component(const GeneratorSet& gens, const Element& x) {
  return x - stage0_component(gens, x);
}

/// Largest stage of any factor appearing in x (0 for constants and zero).
inline int max_stage(const GeneratorSet& gens, const Element& x) {
  int s = 0;
  for (const auto& [m, c] : x.terms()) s = std::max(s, m.max_stage(gens));
  return s;
}

/// Order used for graded bases: lower maximal stage first, then monomial order.
/// Putting Lambda(V_0) monomials first makes echelon pivots land there first.
inline bool basis_less(const GeneratorSet& gens, const Monomial& a, const Monomial& b) {
  const int sa = a.max_stage(gens);
  const int sb = b.max_stage(gens);
  if (sa != sb) return sa < sb;
  return a < b;
}

/// All monomials of total degree m, in basis order.
inline std::vector<Monomial> monomial_basis(const GeneratorSet& gens, int m) {
  std::vector<Monomial> out;
  if (m < 0) return out;
  std::vector<Factor> current;
  // ids are sorted by degree, so recursion can stop at the first generator
  // that no longer fits
  auto recurse = [&](auto&& self, GenId start, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(Monomial::from_sorted(current));
      return;
    }
    for (GenId g = start; g < gens.size(); ++g) {
      const int deg = gens[g].degree;
      if (deg > remaining) break;
      const std::uint32_t max_exp =
          gens[g].odd() ? 1u : static_cast<std::uint32_t>(remaining / deg);
      for (std::uint32_t e = 1; e <= max_exp; ++e) {
        current.push_back({g, e});
        self(self, g + 1, remaining - deg * static_cast<int>(e));
        current.pop_back();
      }
    }
  };
  recurse(recurse, 0, m);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return basis_less(gens, a, b); });
  return out;
}

/// Algebra map fixing generators except those listed, which go to the given
/// images (each of the same degree as its generator).
inline Element substitute(const GeneratorSet& gens, const Element& x,
                          const std::map<GenId, Element>& images) {
  Element out;
  for (const auto& [m, c] : x.terms()) {
    Element term = Element::unit();
    for (const auto& f : m.factors()) {
      auto it = images.find(f.gen);
      const Element img = it == images.end() ? Element::generator(f.gen) : it->second;
      for (std::uint32_t e = 0; e < f.exponent; ++e) term = multiply(gens, term, img);
    }
    out += c * term;
  }
  return out;
}

/// Indexed list of monomials spanning one graded piece.
class DegreeBasis {
 public:
  DegreeBasis() = default;
  explicit DegreeBasis(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  }

  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }

  std::optional<std::size_t> index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  SparseVector to_vector(const Element& x) const {
    std::vector<SparseVector::Entry> entries;
    for (const auto& [m, c] : x.terms()) {
      auto i = index_of(m);
      if (!i) throw InputError("monomial outside the graded piece");
      entries.emplace_back(*i, c);
    }
    return SparseVector::from_entries(std::move(entries));
  }

  Element to_element(const SparseVector& v) const {
    Element out;
    for (const auto& [i, c] : v.entries()) out.add_term(monomials_.at(i), c);
    return out;
  }

 private:
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

}  // namespace sullivan
