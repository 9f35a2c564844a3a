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

#ifndef SUMNET_MATRIX_HPP
#define SUMNET_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "field.hpp"

namespace sumnet {

/// Dense matrix over a finite field; entries are canonical encodings.
/// Immutable by convention once built (the search and solver work on copies).
class FieldMatrix {
 public:
  FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols,
              std::vector<std::uint64_t> values);

  static FieldMatrix identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint64_t at(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint64_t v) { values_[r * cols_ + c] = field_->checked(v); }
  const std::vector<std::uint64_t>& values() const { return values_; }

  FieldElement element_at(std::size_t r, std::size_t c) const { return {field_, at(r, c)}; }

  bool is_identity() const;
  bool is_zero() const;

 private:
  FieldPtr field_;
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> values_;
};

bool operator==(const FieldMatrix& a, const FieldMatrix& b);
inline bool operator!=(const FieldMatrix& a, const FieldMatrix& b) { return !(a == b); }

FieldMatrix mat_add(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b);

/// Inverse by Gauss-Jordan elimination; std::nullopt when singular.
std::optional<FieldMatrix> mat_inv(const FieldMatrix& a);

std::size_t mat_rank(const FieldMatrix& a);

/// Outcome of solving A·x = b. When consistent, `particular` is the unique
/// solution with every free variable set to zero (first-nonzero pivoting makes
/// it reproducible); `nullspace` is a basis of the homogeneous solutions, so
/// the full solution set is particular + span(nullspace).
struct LinearSolution {
  bool consistent = false;
  std::vector<std::uint64_t> particular;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  std::vector<std::vector<std::uint64_t>> nullspace;
};

LinearSolution solve_linear(const FieldMatrix& a, const std::vector<std::uint64_t>& b);
LinearSolution solve_linear(const FieldMatrix& a, const FieldMatrix& b_column);

/// Solves A·X = B columnwise with one shared elimination (free variables set
/// to zero). std::nullopt if any column is inconsistent.
std::optional<FieldMatrix> solve_multi(const FieldMatrix& a, const FieldMatrix& b);

}  // namespace sumnet

#endif  // SUMNET_MATRIX_HPP
