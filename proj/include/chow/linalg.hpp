#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "chow/errors.hpp"
#include "chow/rational.hpp"

namespace chow {

using RationalVec = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVec>;  // row-major

// Incrementally maintained reduced row echelon span. Rows have unit pivots,
// are fully reduced against each other, and are kept sorted by pivot column.
class EchelonSpan {
 public:
  explicit EchelonSpan(int dim) : dim_(dim) {
    if (dim_ < 0) throw ArgumentError("span: negative dimension");
  }

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Residual of v after reduction against the span.
  RationalVec reduce(RationalVec v) const {
    check_dim(v);
    for (const auto& [pivot, row] : rows_) {
      const Rational& c = v[static_cast<std::size_t>(pivot)];
      if (c == 0) continue;
      Rational factor = c;  // row has unit pivot
      for (int j = pivot; j < dim_; ++j)
        v[static_cast<std::size_t>(j)] -= factor * row[static_cast<std::size_t>(j)];
    }
    return v;
  }

  bool contains(const RationalVec& v) const { return is_zero(reduce(v)); }

  // Adds v to the span. Returns true iff the rank grew.
  bool add(RationalVec v) {
    v = reduce(std::move(v));
    int pivot = -1;
    for (int j = 0; j < dim_; ++j) {
      if (v[static_cast<std::size_t>(j)] != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) return false;
    Rational inv = v[static_cast<std::size_t>(pivot)];
    for (int j = pivot; j < dim_; ++j) v[static_cast<std::size_t>(j)] /= inv;
    for (auto& [p, row] : rows_) {
      const Rational c = row[static_cast<std::size_t>(pivot)];
      if (c == 0) continue;
      for (int j = pivot; j < dim_; ++j)
        row[static_cast<std::size_t>(j)] -= c * v[static_cast<std::size_t>(j)];
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                [](const auto& r, int p) { return r.first < p; });
    rows_.insert(pos, {pivot, std::move(v)});
    return true;
  }

  static bool is_zero(const RationalVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
  }

 private:
  void check_dim(const RationalVec& v) const {
    if (static_cast<int>(v.size()) != dim_)
      throw ArgumentError("span: vector has wrong dimension");
  }

  int dim_;
  std::vector<std::pair<int, RationalVec>> rows_;
};

// Reduced row echelon form in place. Returns the pivot column indices in
// ascending order.
inline std::vector<int> row_reduce(RationalMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != cols)
      throw ArgumentError("matrix: ragged rows");
  int cur = 0;
  for (int col = 0; col < cols && cur < rows; ++col) {
    int sel = -1;
    for (int i = cur; i < rows; ++i) {
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[static_cast<std::size_t>(cur)], m[static_cast<std::size_t>(sel)]);
    Rational inv = m[static_cast<std::size_t>(cur)][static_cast<std::size_t>(col)];
    for (int j = col; j < cols; ++j) m[static_cast<std::size_t>(cur)][static_cast<std::size_t>(j)] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == cur) continue;
      Rational c = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      if (c == 0) continue;
      for (int j = col; j < cols; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            c * m[static_cast<std::size_t>(cur)][static_cast<std::size_t>(j)];
    }
    pivots.push_back(col);
    ++cur;
  }
  return pivots;
}

inline int matrix_rank(RationalMatrix m) {
  return static_cast<int>(row_reduce(m).size());
}

// Canonical nullspace basis of the linear map given by matrix rows acting on
// n_cols coordinates: one vector per non-pivot column j, with entry 1 at j
// and the solved pivot entries elsewhere. Handles matrices with zero rows
// (kernel = everything).
inline std::vector<RationalVec> nullspace(RationalMatrix a, int n_cols) {
  if (n_cols < 0) throw ArgumentError("nullspace: negative column count");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n_cols)
      throw ArgumentError("nullspace: row width mismatch");
  std::vector<int> pivots = row_reduce(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n_cols), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<RationalVec> basis;
  for (int j = 0; j < n_cols; ++j) {
    if (is_pivot[static_cast<std::size_t>(j)]) continue;
    RationalVec v(static_cast<std::size_t>(n_cols), Rational(0));
    v[static_cast<std::size_t>(j)] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      // Row i has unit pivot at column pivots[i].
      v[static_cast<std::size_t>(pivots[i])] = -a[i][static_cast<std::size_t>(j)];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Unique solution of A x = b. Returns nullopt when the system is
// inconsistent; throws when A does not have full column rank (no unique
// solution to report).
inline std::optional<RationalVec> solve_unique(const RationalMatrix& a,
                                               const RationalVec& b) {
  const int rows = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != rows)
    throw ArgumentError("solve: right-hand side has wrong dimension");
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  RationalMatrix aug;
  aug.reserve(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    RationalVec row = a[static_cast<std::size_t>(i)];
    row.push_back(b[static_cast<std::size_t>(i)]);
    aug.push_back(std::move(row));
  }
  std::vector<int> pivots = row_reduce(aug);
  for (int p : pivots)
    if (p == cols) return std::nullopt;  // pivot in the b column: inconsistent
  if (static_cast<int>(pivots.size()) != cols)
    throw ConsistencyError("solve: matrix does not have full column rank");
  RationalVec x(static_cast<std::size_t>(cols), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[static_cast<std::size_t>(pivots[i])] = aug[i][static_cast<std::size_t>(cols)];
  return x;
}

}  // namespace chow
