#pragma once

// Job files: a flat sectioned text format.
//
//   # comment
//   algebra:
//     generators: a1:2, a2:2
//     relations: a1^2, a2^2
//     truncation: 4
//   names:
//     b12:3 = a1*a2
//   attach:
//     cell: 4
//     alpha: b12 = 1
//   even:
//     k: 1
//
// Section headers start in column 1; entries are indented.  List entries
// (generators, relations, alpha) may be split over several lines.  Several
// attach sections describe cells attached in order (even mode only).
// Elements use the shared element grammar; docs/format.md has the EBNF.

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sullivan/attachment.hpp"
#include "sullivan/errors.hpp"
#include "sullivan/format.hpp"
#include "sullivan/minimal_model.hpp"
#include "sullivan/presented_algebra.hpp"

namespace sullivan {

struct SourceText {
  std::string text;
  int line = 0;
  int column = 0;
};

struct AttachSpec {
  std::optional<int> cell;
  std::vector<std::pair<std::string, Scalar>> alpha;
  int line = 0;  // of the section header
};

struct JobSpec {
  std::vector<Generator> generators;  // input order
  std::vector<SourceText> relations;
  std::optional<int> truncation;
  std::vector<ModelSeed> names;  // preferred model generators
  std::vector<AttachSpec> attachments;
  std::optional<int> even_k;
};

namespace detail {

struct Piece {
  std::string_view text;
  int column;  // 1-based column of text[0]
};

inline Piece trim(Piece p) {
  std::size_t b = 0;
  std::size_t e = p.text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(p.text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(p.text[e - 1]))) --e;
  return {p.text.substr(b, e - b), p.column + static_cast<int>(b)};
}

inline std::vector<Piece> split(Piece p, char sep) {
  std::vector<Piece> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= p.text.size(); ++i) {
    if (i == p.text.size() || p.text[i] == sep) {
      out.push_back(trim({p.text.substr(start, i - start), p.column + static_cast<int>(start)}));
      start = i + 1;
    }
  }
  return out;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

inline int parse_int(Piece p, int line, const std::string& what) {
  int v = 0;
  const char* b = p.text.data();
  const char* e = b + p.text.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (p.text.empty() || ec != std::errc() || ptr != e) {
    throw ParseError("expected an integer " + what + ", got '" + std::string(p.text) + "'", line,
                     p.column);
  }
  return v;
}

class JobParser {
 public:
  explicit JobParser(std::string_view text) : text_(text) {}

  JobSpec parse() {
    std::size_t pos = 0;
    int line = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line;
      std::string_view raw = text_.substr(pos, end - pos);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      handle_line(raw, line);
      if (end == text_.size()) break;
      pos = end + 1;
    }
    return std::move(job_);
  }

 private:
  void handle_line(std::string_view raw, int line) {
    const Piece whole = trim({raw, 1});
    if (whole.text.empty()) return;
    const bool indented = std::isspace(static_cast<unsigned char>(raw[0]));
    if (!indented) {
      if (whole.text.back() != ':') {
        throw ParseError("expected a section header such as 'algebra:'", line, whole.column);
      }
      const std::string name(trim({whole.text.substr(0, whole.text.size() - 1), 1}).text);
      if (name == "algebra" || name == "names" || name == "even") {
        if (name == "algebra" && seen_algebra_) throw ParseError("duplicate algebra section", line, 1);
        if (name == "even" && seen_even_) throw ParseError("duplicate even section", line, 1);
        seen_algebra_ = seen_algebra_ || name == "algebra";
        seen_even_ = seen_even_ || name == "even";
      } else if (name == "attach") {
        job_.attachments.push_back({});
        job_.attachments.back().line = line;
      } else {
        throw ParseError("unknown section '" + name + "' (expected algebra, names, attach or even)",
                         line, 1);
      }
      section_ = name;
      return;
    }
    if (section_.empty()) throw ParseError("entry outside any section", line, whole.column);
    if (section_ == "names") return named_generator(whole, line);

    const auto colon = whole.text.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected 'key: value'", line, whole.column);
    }
    const Piece key = trim({whole.text.substr(0, colon), whole.column});
    const Piece value = trim({whole.text.substr(colon + 1), whole.column + static_cast<int>(colon) + 1});
    const std::string k(key.text);

    if (section_ == "algebra") {
      if (k == "generators") return generators(value, line);
      if (k == "relations") return relations(value, line);
      if (k == "truncation") {
        if (job_.truncation) throw ParseError("truncation given twice", line, key.column);
        job_.truncation = parse_int(value, line, "truncation");
        return;
      }
    } else if (section_ == "attach") {
      auto& a = job_.attachments.back();
      if (k == "cell") {
        if (a.cell) throw ParseError("cell given twice", line, key.column);
        a.cell = parse_int(value, line, "cell dimension");
        return;
      }
      if (k == "alpha") return alpha(value, line, a);
    } else if (section_ == "even") {
      if (k == "k") {
        job_.even_k = parse_int(value, line, "k");
        return;
      }
    }
    throw ParseError("unknown key '" + k + "' in section " + section_, line, key.column);
  }

  void generators(Piece value, int line) {
    if (value.text.empty()) return;
    for (const Piece item : split(value, ',')) {
      const auto colon = item.text.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("expected 'name:degree'", line, item.column);
      }
      const Piece name = trim({item.text.substr(0, colon), item.column});
      const Piece deg = trim({item.text.substr(colon + 1), item.column + static_cast<int>(colon) + 1});
      if (!is_identifier(name.text)) {
        throw ParseError("invalid generator name '" + std::string(name.text) + "'", line, name.column);
      }
      for (const auto& g : job_.generators) {
        if (g.name == name.text) {
          throw ParseError("duplicate generator '" + g.name + "'", line, name.column);
        }
      }
      const int d = parse_int(deg, line, "degree");
      if (d < 1) throw ParseError("degree must be positive", line, deg.column);
      job_.generators.push_back({std::string(name.text), d, 0, 0});
    }
  }

  void relations(Piece value, int line) {
    if (value.text.empty()) return;
    for (const Piece item : split(value, ',')) {
      if (item.text.empty()) throw ParseError("empty relation", line, item.column);
      job_.relations.push_back({std::string(item.text), line, item.column});
    }
  }

  void alpha(Piece value, int line, AttachSpec& a) {
    if (value.text.empty()) return;
    for (const Piece item : split(value, ',')) {
      const auto eq = item.text.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError("expected 'generator = rational'", line, item.column);
      }
      const Piece name = trim({item.text.substr(0, eq), item.column});
      const Piece num = trim({item.text.substr(eq + 1), item.column + static_cast<int>(eq) + 1});
      if (!is_identifier(name.text)) {
        throw ParseError("invalid generator name '" + std::string(name.text) + "'", line, name.column);
      }
      Scalar c;
      try {
        c = parse_scalar(num.text);
      } catch (const InputError&) {
        throw ParseError("expected a rational number, got '" + std::string(num.text) + "'", line,
                         num.column);
      }
      for (const auto& [n, v] : a.alpha) {
        if (n == name.text) throw ParseError("alpha given twice for '" + n + "'", line, name.column);
      }
      a.alpha.emplace_back(std::string(name.text), c);
    }
  }

  void named_generator(Piece whole, int line) {
    const auto eq = whole.text.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected 'name:degree = differential'", line, whole.column);
    }
    const Piece head = trim({whole.text.substr(0, eq), whole.column});
    const Piece body = trim({whole.text.substr(eq + 1), whole.column + static_cast<int>(eq) + 1});
    const auto colon = head.text.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected 'name:degree'", line, head.column);
    }
    const Piece name = trim({head.text.substr(0, colon), head.column});
    const Piece deg = trim({head.text.substr(colon + 1), head.column + static_cast<int>(colon) + 1});
    if (!is_identifier(name.text)) {
      throw ParseError("invalid generator name '" + std::string(name.text) + "'", line, name.column);
    }
    if (body.text.empty()) throw ParseError("missing differential", line, body.column);
    job_.names.push_back(
        {std::string(name.text), parse_int(deg, line, "degree"), std::string(body.text), line, body.column});
  }

  std::string_view text_;
  JobSpec job_;
  std::string section_;
  bool seen_algebra_ = false;
  bool seen_even_ = false;
};

}  // namespace detail

inline JobSpec parse_job(std::string_view text) { return detail::JobParser(text).parse(); }

/// The algebra through `truncation`, relations parsed with their source
/// positions.
inline PresentedAlgebra job_algebra(const JobSpec& job, int truncation) {
  GeneratorSet gens(job.generators);
  std::vector<Element> rels;
  for (const auto& r : job.relations) rels.push_back(parse_element(gens, r.text, r.line, r.column));
  return PresentedAlgebra(std::move(gens), std::move(rels), truncation);
}

inline AlphaFunctional job_alpha(const AttachSpec& a) {
  if (!a.cell) throw ParseError("attach section has no cell dimension", a.line, 1);
  AlphaFunctional out{*a.cell, {}};
  for (const auto& [name, c] : a.alpha) out.coefficients[name] = c;
  return out;
}

}  // namespace sullivan
