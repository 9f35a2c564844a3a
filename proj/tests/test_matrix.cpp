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

#include <random>

#include "doctest.h"

#include "matrix.hpp"

using namespace sumnet;

namespace {

FieldMatrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols,
                          std::mt19937_64& rng) {
  FieldMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, f->random_element(rng));
  return m;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("identity is a multiplicative unit") {
  const auto f = Field::make(5, 1);
  std::mt19937_64 rng(7);
  const FieldMatrix eye = FieldMatrix::identity(f, 3);
  for (int i = 0; i < 20; ++i) {
    const FieldMatrix a = random_matrix(f, 3, 3, rng);
    CHECK(mat_mul(eye, a) == a);
    CHECK(mat_mul(a, eye) == a);
  }
  CHECK(*mat_inv(eye) == eye);
}

TEST_CASE("the binary upper-triangular involution") {
  const auto f = Field::make(2, 1);
  const FieldMatrix a(f, 2, 2, {1, 1, 0, 1});
  const auto inv = mat_inv(a);
  REQUIRE(inv.has_value());
  CHECK(*inv == a);
  CHECK(mat_mul(a, *inv).is_identity());
}

TEST_CASE("inverse against multiplication, singular against rank") {
  const auto f = Field::make(7, 1);
  std::mt19937_64 rng(11);
  int invertible = 0, singular = 0;
  for (int i = 0; i < 200; ++i) {
    const FieldMatrix a = random_matrix(f, 4, 4, rng);
    const auto inv = mat_inv(a);
    if (inv) {
      ++invertible;
      CHECK(mat_mul(a, *inv).is_identity());
      CHECK(mat_mul(*inv, a).is_identity());
      CHECK(mat_rank(a) == 4);
    } else {
      ++singular;
      CHECK(mat_rank(a) < 4);
    }
  }
  CHECK(invertible > 0);
  CHECK(singular > 0);  // rank-deficient draws occur over GF(7) in 200 tries
}

TEST_CASE("shape errors") {
  const auto f = Field::make(3, 1);
  const FieldMatrix a(f, 2, 3);
  const FieldMatrix b(f, 2, 3);
  CHECK_THROWS_AS(mat_mul(a, b), std::invalid_argument);
  CHECK_THROWS_AS(mat_inv(a), std::invalid_argument);
  CHECK_THROWS_AS(mat_add(a, FieldMatrix(f, 3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(FieldMatrix(f, 0, 2), std::invalid_argument);
  const FieldMatrix c(Field::make(5, 1), 3, 3);
  CHECK_THROWS_AS(mat_mul(a, c), std::invalid_argument);
}

TEST_CASE("solving with the identity and with the zero matrix") {
  const auto f = Field::make(5, 1);
  const FieldMatrix eye = FieldMatrix::identity(f, 3);
  const std::vector<std::uint64_t> b{2, 0, 4};
  const auto sol = solve_linear(eye, b);
  REQUIRE(sol.consistent);
  CHECK(sol.particular == b);
  CHECK(sol.rank == 3);
  CHECK(sol.nullspace.empty());

  const FieldMatrix zero(f, 2, 2);
  CHECK_FALSE(solve_linear(zero, {1, 0}).consistent);
  CHECK(solve_linear(zero, {0, 0}).consistent);
}

TEST_CASE("a singular ternary system, checked against full enumeration") {
  const auto f = Field::make(3, 1);
  const FieldMatrix a(f, 2, 2, {1, 2, 2, 1});
  const auto sol = solve_linear(a, {0, 0});
  REQUIRE(sol.consistent);

  // Enumerate all 9 vectors to find the true solution set.
  std::vector<std::vector<std::uint64_t>> solutions;
  for (std::uint64_t x0 = 0; x0 < 3; ++x0) {
    for (std::uint64_t x1 = 0; x1 < 3; ++x1) {
      const bool top = f->add(f->mul(1, x0), f->mul(2, x1)) == 0;
      const bool bottom = f->add(f->mul(2, x0), f->mul(1, x1)) == 0;
      if (top && bottom) solutions.push_back({x0, x1});
    }
  }
  CHECK(solutions == std::vector<std::vector<std::uint64_t>>{{0, 0}, {1, 1}, {2, 2}});

  // Three solutions over GF(3) means nullity 1, so rank 1.
  CHECK(sol.rank == 1);
  CHECK(sol.particular == std::vector<std::uint64_t>{0, 0});
  REQUIRE(sol.nullspace.size() == 1);
  CHECK(sol.nullspace[0] == std::vector<std::uint64_t>{1, 1});
}

TEST_CASE("solutions satisfy the system, nullspace annihilates") {
  std::mt19937_64 rng(23);
  for (const auto& [p, k] : {std::pair<std::uint64_t, unsigned>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const auto f = Field::make(p, k);
    for (int i = 0; i < 50; ++i) {
      const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
      const FieldMatrix a = random_matrix(f, rows, cols, rng);
      // Build a consistent right-hand side from a random solution.
      std::vector<std::uint64_t> x(cols);
      for (auto& v : x) v = f->random_element(rng);
      std::vector<std::uint64_t> b(rows, 0);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) b[r] = f->add(b[r], f->mul(a.at(r, c), x[c]));

      const auto sol = solve_linear(a, b);
      REQUIRE(sol.consistent);
      for (std::size_t r = 0; r < rows; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols; ++c)
          acc = f->add(acc, f->mul(a.at(r, c), sol.particular[c]));
        REQUIRE(acc == b[r]);
      }
      for (const auto& basis : sol.nullspace) {
        for (std::size_t r = 0; r < rows; ++r) {
          std::uint64_t acc = 0;
          for (std::size_t c = 0; c < cols; ++c)
            acc = f->add(acc, f->mul(a.at(r, c), basis[c]));
          REQUIRE(acc == 0);
        }
      }
      CHECK(sol.rank + sol.nullspace.size() == cols);
    }
  }
}

TEST_CASE("multi right-hand-side solving matches the inverse") {
  const auto f = Field::make(7, 1);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    const FieldMatrix a = random_matrix(f, 3, 3, rng);
    const auto inv = mat_inv(a);
    if (!inv) continue;
    const FieldMatrix b = random_matrix(f, 3, 2, rng);
    const auto x = solve_multi(a, b);
    REQUIRE(x.has_value());
    CHECK(*x == mat_mul(*inv, b));
  }
  CHECK_THROWS_AS(solve_multi(FieldMatrix(f, 2, 2), FieldMatrix(f, 3, 1)),
                  std::invalid_argument);
}

}  // TEST_SUITE
