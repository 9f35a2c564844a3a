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

#ifndef SUMNET_FIELD_HPP
#define SUMNET_FIELD_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sumnet {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^k) with exact arithmetic on canonically encoded elements.
///
/// An element is the integer Σ c[i]·p^i where (c[0], ..., c[k-1]) are the
/// coefficients of its polynomial representation, least degree first. The
/// modulus is the lexicographically smallest monic irreducible polynomial of
/// degree k over GF(p) (coefficient vectors compared least degree first), so
/// a (p, k) pair always denotes the same field across runs. For k = 1 the
/// modulus is the polynomial x by convention.
///
/// Fields are immutable after construction; sharing one instance between
/// threads is safe.
class Field {
 public:
  /// Largest admissible order p^k.
  static constexpr std::uint64_t kMaxOrder = 1ull << 20;

  /// Builds GF(p^k). Throws std::invalid_argument if p is not prime,
  /// k < 1, or p^k exceeds kMaxOrder.
  static FieldPtr make(std::uint64_t p, unsigned k);

  /// Parses a field designation "p^k" (plain "p" means k = 1).
  static FieldPtr parse(std::string_view designation);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t order() const { return q_; }

  /// Modulus coefficients, least degree first; length k+1, leading 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::string designation() const;  // "p^k"

  /// Two Field instances denote the same field iff p and k agree
  /// (the modulus is then identical by construction).
  bool same_as(const Field& other) const {
    return this == &other || (p_ == other.p_ && k_ == other.k_);
  }

  // Element arithmetic on canonical encodings. All inputs must be < order().
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;  // throws std::domain_error on 0
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  std::vector<std::uint32_t> coeffs_of(std::uint64_t v) const;
  std::uint64_t element_from_coeffs(std::span<const std::uint32_t> coeffs) const;

  std::uint64_t random_element(std::mt19937_64& rng) const { return rng() % q_; }

  /// Range-checks a canonical encoding coming from external input.
  std::uint64_t checked(std::uint64_t v) const;

 private:
  Field(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus);

  std::uint64_t mul_poly(std::uint64_t a, std::uint64_t b) const;  // table-free path
  void build_tables();

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  // discrete log tables over a primitive element; exp_ has q-1 entries
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// A field element paired with its field, for code that wants checked
/// value semantics rather than raw canonical encodings.
struct FieldElement {
  FieldPtr field;
  std::uint64_t value = 0;
};

FieldElement fe_make(FieldPtr field, std::uint64_t canonical_value);
FieldElement fe_add(const FieldElement& a, const FieldElement& b);
FieldElement fe_sub(const FieldElement& a, const FieldElement& b);
FieldElement fe_mul(const FieldElement& a, const FieldElement& b);
FieldElement fe_neg(const FieldElement& a);
FieldElement fe_inv(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return fe_add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return fe_sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return fe_mul(a, b); }
inline FieldElement operator-(const FieldElement& a) { return fe_neg(a); }
bool operator==(const FieldElement& a, const FieldElement& b);
inline bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

bool is_prime(std::uint64_t n);

}  // namespace sumnet

#endif  // SUMNET_FIELD_HPP
