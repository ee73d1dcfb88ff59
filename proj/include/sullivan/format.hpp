#pragma once

// Text form of elements, shared by the printer and the parser:
//
//   expr    = [sign] term { sign term }
//   term    = factor { "*" factor }
//   factor  = rational | name [ "^" integer ] | "(" expr ")"
//   rational= integer [ "/" integer ]
//   name    = letter { letter | digit | "_" }
//   sign    = "+" | "-"
//
// Whitespace is ignored between tokens.  The printer emits terms in monomial
// order, e.g. "a1^2*b - 3/2*c".

#include <cctype>
#include <string>
#include <string_view>

#include "sullivan/errors.hpp"
#include "sullivan/gca.hpp"

namespace sullivan {

inline std::string to_string(const GeneratorSet& gens, const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += gens[f.gen].name;
    if (f.exponent > 1) out += '^' + std::to_string(f.exponent);
  }
  return out;
}

inline std::string to_string(const GeneratorSet& gens, const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Scalar mag = negative ? Scalar(-c) : c;
    if (m.is_unit()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += to_string(gens, m);
    }
    first = false;
  }
  return out;
}

namespace detail {

class ElementParser {
 public:
  ElementParser(const GeneratorSet& gens, std::string_view text, int line, int column)
      : gens_(gens), text_(text), line_(line), column_(column) {}

  Element parse() {
    Element e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, column_ + static_cast<int>(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Element expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Element sum = term();
    if (negate) sum = -sum;
    while (true) {
      if (accept('+')) {
        sum += term();
      } else if (accept('-')) {
        sum -= term();
      } else {
        return sum;
      }
    }
  }

  Element term() {
    Element prod = factor();
    while (accept('*')) prod = multiply(gens_, prod, factor());
    return prod;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Element factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a term");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Element inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::string den = digits();
        if (den.empty()) fail("expected a denominator");
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        num += '/' + den;
      }
      return Element(Monomial(), parse_scalar(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      auto id = gens_.find(name);
      if (!id) {
        pos_ = start;
        fail("unknown generator '" + name + "'");
      }
      Element g = Element::generator(*id);
      if (accept('^')) {
        skip_ws();
        std::string e = digits();
        if (e.empty()) fail("expected an exponent");
        if (e.size() > 4) fail("exponent too large");
        Element p = Element::unit();
        for (int i = 0, n = std::stoi(e); i < n; ++i) p = multiply(gens_, p, g);
        return p;
      }
      return g;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const GeneratorSet& gens_;
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column_;
};

}  // namespace detail

/// Parses an element in the shared grammar.  line/column locate the text in
/// a larger input for error messages.
inline Element parse_element(const GeneratorSet& gens, std::string_view text, int line = 1,
                             int column = 1) {
  return detail::ElementParser(gens, text, line, column).parse();
}

}  // namespace sullivan
