#pragma once

// Exact linear algebra over the rationals.
//
// Dense routines (rref, kernel_basis, solve_in_span) serve small systems and
// double as an independent oracle in tests.  The sparse routines
// (SparseVector, Echelon, KernelTracker) carry the graded pieces of free
// algebras, which are large but have very few nonzeros per row.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sullivan/errors.hpp"

namespace sullivan {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

inline Scalar make_scalar(long num, long den = 1) {
  if (den == 0) throw InputError("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Scalar& q) { return q.get_str(); }

/// Parses "p" or "p/q" with optional sign; result is canonical.
inline Scalar parse_scalar(std::string_view text) {
  Scalar q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw InputError("not a rational number: '" + s + "'");
  }
  if (q.get_den() == 0) throw InputError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw InputError("ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << m(r, c).get_str();
    }
    os << "]\n";
  }
  return os;
}

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
inline RrefResult rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    const Scalar inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Null space basis in free-variable form: one vector per non-pivot column,
/// carrying a 1 in that column and zeros in every other free column.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
  const auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Coefficients c with sum c_i * basis_i == target, or nullopt when target is
/// outside the span.  Free coefficients are set to zero.
inline std::optional<Vector> solve_in_span(const std::vector<Vector>& basis,
                                           const Vector& target) {
  for (const auto& b : basis) {
    if (b.size() != target.size()) {
      throw InputError("solve_in_span: vector length mismatch");
    }
  }
  const std::size_t n = target.size();
  const std::size_t k = basis.size();
  Matrix aug(n, k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
  }
  for (std::size_t i = 0; i < n; ++i) aug(i, k) = target[i];
  const auto [r, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  Vector coeffs(k);
  for (std::size_t i = 0; i < pivots.size(); ++i) coeffs[pivots[i]] = r(i, k);
  return coeffs;
}

// ---------------------------------------------------------------------------
// Sparse vectors and incremental elimination.

class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVector() = default;

  static SparseVector unit(std::size_t index) {
    SparseVector v;
    v.entries_.emplace_back(index, Scalar(1));
    return v;
  }

  static SparseVector from_dense(std::span<const Scalar> dense) {
    SparseVector v;
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (dense[i] != 0) v.entries_.emplace_back(i, dense[i]);
    }
    return v;
  }

  /// Entries may arrive unsorted or repeated; they are summed.
  static SparseVector from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVector v;
    for (auto& [i, c] : entries) {
      if (!v.entries_.empty() && v.entries_.back().first == i) {
        v.entries_.back().second += c;
        if (v.entries_.back().second == 0) v.entries_.pop_back();
      } else if (c != 0) {
        v.entries_.emplace_back(i, std::move(c));
      }
    }
    return v;
  }

  Vector to_dense(std::size_t size) const {
    Vector out(size);
    for (const auto& [i, c] : entries_) {
      if (i >= size) throw InputError("sparse index out of range");
      out[i] = c;
    }
    return out;
  }

  bool empty() const { return entries_.empty(); }
  std::size_t nonzeros() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  std::size_t leading() const { return entries_.front().first; }
  const Scalar& leading_coefficient() const { return entries_.front().second; }

  Scalar at(std::size_t index) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), index,
        [](const Entry& e, std::size_t i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) return it->second;
    return 0;
  }

  void scale(const Scalar& f) {
    if (f == 0) {
      entries_.clear();
      return;
    }
    for (auto& e : entries_) e.second *= f;
  }

  /// this += f * other
  void add_scaled(const SparseVector& other, const Scalar& f) {
    if (f == 0 || other.empty()) return;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
      if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
        merged.push_back(std::move(*a++));
      } else if (a == entries_.end() || b->first < a->first) {
        merged.emplace_back(b->first, f * b->second);
        ++b;
      } else {
        Scalar c = a->second + f * b->second;
        if (c != 0) merged.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    entries_ = std::move(merged);
  }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Incrementally maintained reduced row-echelon basis of a subspace.
/// The pivot of a row is its smallest nonzero index.
class Echelon {
 public:
  /// Reduces v modulo the span; the result has zeros in every pivot column.
  SparseVector reduce(SparseVector v) const {
    if (rows_.empty()) return v;
    std::size_t cursor = 0;
    while (true) {
      const auto& e = v.entries();
      auto it = std::lower_bound(
          e.begin(), e.end(), cursor,
          [](const SparseVector::Entry& x, std::size_t i) { return x.first < i; });
      std::optional<std::size_t> hit;
      for (; it != e.end(); ++it) {
        if (rows_.count(it->first)) {
          hit = it->first;
          break;
        }
      }
      if (!hit) return v;
      const Scalar f = -v.at(*hit);
      v.add_scaled(rows_.at(*hit), f);
      cursor = *hit + 1;
    }
  }

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  /// Adds v to the span; returns false when v was already in it.
  bool insert(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.empty()) return false;
    const std::size_t p = r.leading();
    r.scale(1 / Scalar(r.leading_coefficient()));
    for (auto& [q, row] : rows_) {
      const Scalar f = row.at(p);
      if (f != 0) row.add_scaled(r, -f);
    }
    rows_.emplace(p, std::move(r));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }

  /// Rows ordered by pivot column.
  const std::map<std::size_t, SparseVector>& rows() const { return rows_; }

 private:
  std::map<std::size_t, SparseVector> rows_;
};

/// Null space of a linear map given row by row: feed the image of each basis
/// vector in order; when an image is dependent on earlier ones the returned
/// combination (over source indices) is a kernel vector.  Kernel vectors found
/// after feeding the first r rows span the kernel restricted to those rows.
class KernelTracker {
 public:
  std::optional<SparseVector> add(SparseVector image) {
    SparseVector combo = SparseVector::unit(next_++);
    while (!image.empty()) {
      auto it = pivots_.find(image.leading());
      if (it == pivots_.end()) {
        const Scalar inv = 1 / Scalar(image.leading_coefficient());
        image.scale(inv);
        combo.scale(inv);
        const std::size_t lead = image.leading();
        pivots_.emplace(lead, Row{std::move(image), std::move(combo)});
        return std::nullopt;
      }
      const Scalar f = -image.leading_coefficient();
      image.add_scaled(it->second.image, f);
      combo.add_scaled(it->second.combo, f);
    }
    return combo;
  }

  std::size_t rank() const { return pivots_.size(); }
  std::size_t fed() const { return next_; }

 private:
  struct Row {
    SparseVector image;
    SparseVector combo;
  };
  std::map<std::size_t, Row> pivots_;
  std::size_t next_ = 0;
};

}  // namespace sullivan
