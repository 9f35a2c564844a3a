/*
 * Copyright 2026 The sumnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "matrix.hpp"

#include <stdexcept>

namespace sumnet {

namespace {

void require_field(const FieldPtr& f) {
  if (!f) throw std::invalid_argument("matrix requires a field");
}

const Field& require_compatible(const FieldMatrix& a, const FieldMatrix& b) {
  if (!a.field()->same_as(*b.field())) {
    throw std::invalid_argument("matrix field mismatch: " + a.field()->designation() + " vs " +
                                b.field()->designation());
  }
  return *a.field();
}

// Row-reduced echelon form of an augmented system [A | B], in place.
// Pivoting is deterministic: per column, the first row (top down) with a
// nonzero entry. Returns pivot columns of the A part.
std::vector<std::size_t> reduce(const Field& f, std::vector<std::uint64_t>& m,
                                std::size_t rows, std::size_t a_cols, std::size_t total_cols) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a_cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && m[sel * total_cols + col] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row) {
      for (std::size_t c = 0; c < total_cols; ++c)
        std::swap(m[sel * total_cols + c], m[pivot_row * total_cols + c]);
    }
    const std::uint64_t scale = f.inv(m[pivot_row * total_cols + col]);
    for (std::size_t c = col; c < total_cols; ++c)
      m[pivot_row * total_cols + c] = f.mul(m[pivot_row * total_cols + c], scale);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      const std::uint64_t factor = m[r * total_cols + col];
      if (factor == 0) continue;
      for (std::size_t c = col; c < total_cols; ++c) {
        m[r * total_cols + c] =
            f.sub(m[r * total_cols + c], f.mul(factor, m[pivot_row * total_cols + c]));
      }
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

}  // namespace

FieldMatrix::FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), values_(rows * cols, 0) {
  require_field(field_);
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

FieldMatrix::FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols,
                         std::vector<std::uint64_t> values)
    : field_(std::move(field)), rows_(rows), cols_(cols), values_(std::move(values)) {
  require_field(field_);
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix dimensions must be positive");
  if (values_.size() != rows_ * cols_) throw std::invalid_argument("matrix value count mismatch");
  for (std::uint64_t v : values_) field_->checked(v);
}

FieldMatrix FieldMatrix::identity(FieldPtr field, std::size_t n) {
  FieldMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.values_[i * n + i] = 1;
  return m;
}

bool FieldMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1u : 0u)) return false;
  return true;
}

bool FieldMatrix::is_zero() const {
  for (std::uint64_t v : values_)
    if (v != 0) return false;
  return true;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  return a.field()->same_as(*b.field()) && a.rows() == b.rows() && a.cols() == b.cols() &&
         a.values() == b.values();
}

FieldMatrix mat_add(const FieldMatrix& a, const FieldMatrix& b) {
  const Field& f = require_compatible(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix addition dimension mismatch");
  std::vector<std::uint64_t> out(a.values().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.values()[i], b.values()[i]);
  return {a.field(), a.rows(), a.cols(), std::move(out)};
}

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b) {
  const Field& f = require_compatible(a, b);
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product dimension mismatch: " + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()));
  FieldMatrix out(a.field(), a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t av = a.at(r, k);
      if (av == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        const std::uint64_t prod = f.mul(av, b.at(k, c));
        if (prod != 0) out.set(r, c, f.add(out.at(r, c), prod));
      }
    }
  }
  return out;
}

std::optional<FieldMatrix> mat_inv(const FieldMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse requires a square matrix");
  const Field& f = *a.field();
  const std::size_t n = a.rows();
  std::vector<std::uint64_t> aug(n * 2 * n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r * 2 * n + c] = a.at(r, c);
    aug[r * 2 * n + n + r] = 1;
  }
  const auto pivots = reduce(f, aug, n, n, 2 * n);
  if (pivots.size() < n) return std::nullopt;
  std::vector<std::uint64_t> out(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out[r * n + c] = aug[r * 2 * n + n + c];
  return FieldMatrix(a.field(), n, n, std::move(out));
}

std::size_t mat_rank(const FieldMatrix& a) {
  std::vector<std::uint64_t> m = a.values();
  return reduce(*a.field(), m, a.rows(), a.cols(), a.cols()).size();
}

LinearSolution solve_linear(const FieldMatrix& a, const std::vector<std::uint64_t>& b) {
  if (b.size() != a.rows())
    throw std::invalid_argument("right-hand side must have one entry per matrix row");
  const Field& f = *a.field();
  const std::size_t rows = a.rows(), cols = a.cols(), total = cols + 1;
  std::vector<std::uint64_t> aug(rows * total);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug[r * total + c] = a.at(r, c);
    aug[r * total + cols] = f.checked(b[r]);
  }
  const auto pivots = reduce(f, aug, rows, cols, total);

  LinearSolution sol;
  sol.rank = pivots.size();
  sol.pivot_columns = pivots;

  // Inconsistent iff some fully reduced row is 0 = nonzero.
  for (std::size_t r = pivots.size(); r < rows; ++r) {
    if (aug[r * total + cols] != 0) {
      sol.consistent = false;
      return sol;
    }
  }
  sol.consistent = true;
  sol.particular.assign(cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug[i * total + cols];

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t freec = 0; freec < cols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<std::uint64_t> basis(cols, 0);
    basis[freec] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis[pivots[i]] = f.neg(aug[i * total + freec]);
    sol.nullspace.push_back(std::move(basis));
  }
  return sol;
}

LinearSolution solve_linear(const FieldMatrix& a, const FieldMatrix& b_column) {
  require_compatible(a, b_column);
  if (b_column.cols() != 1) throw std::invalid_argument("right-hand side must be a column");
  return solve_linear(a, b_column.values());
}

std::optional<FieldMatrix> solve_multi(const FieldMatrix& a, const FieldMatrix& b) {
  const Field& f = require_compatible(a, b);
  if (b.rows() != a.rows())
    throw std::invalid_argument("right-hand side must have one row per matrix row");
  const std::size_t rows = a.rows(), cols = a.cols(), rhs = b.cols(), total = cols + rhs;
  std::vector<std::uint64_t> aug(rows * total);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug[r * total + c] = a.at(r, c);
    for (std::size_t c = 0; c < rhs; ++c) aug[r * total + cols + c] = b.at(r, c);
  }
  const auto pivots = reduce(f, aug, rows, cols, total);
  for (std::size_t r = pivots.size(); r < rows; ++r)
    for (std::size_t c = 0; c < rhs; ++c)
      if (aug[r * total + cols + c] != 0) return std::nullopt;

  FieldMatrix x(a.field(), cols, rhs);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t c = 0; c < rhs; ++c) x.set(pivots[i], c, aug[i * total + cols + c]);
  return x;
}

}  // namespace sumnet
