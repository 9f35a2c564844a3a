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

#include "field.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "errors.hpp"

namespace sumnet {

namespace {

using Poly = std::vector<std::uint32_t>;  // least degree first

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic divisor d, over GF(p).
Poly poly_rem(Poly f, const Poly& d, std::uint64_t p) {
  poly_trim(f);
  while (f.size() >= d.size()) {
    const std::uint64_t c = f.back();
    const std::size_t shift = f.size() - d.size();
    if (c != 0) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        std::uint64_t x = f[shift + i] + p - (c * d[i]) % p;
        f[shift + i] = static_cast<std::uint32_t>(x % p);
      }
    }
    f.pop_back();
    poly_trim(f);
  }
  return f;
}

bool poly_divides(const Poly& d, const Poly& f, std::uint64_t p) {
  return poly_rem(f, d, p).empty();
}

// Advances a monic-polynomial tail (c0..c_{k-1}) to the lexicographic
// successor, last coefficient cycling fastest. Returns false on wraparound.
bool next_tail(Poly& tail, std::uint64_t p) {
  for (std::size_t i = tail.size(); i-- > 0;) {
    if (++tail[i] < p) return true;
    tail[i] = 0;
  }
  return false;
}

// Monic degree-k polynomial f is irreducible over GF(p) iff no monic
// polynomial of degree 1..k/2 divides it.
bool poly_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    Poly tail(d, 0);
    do {
      Poly divisor = tail;
      divisor.push_back(1);
      if (poly_divides(divisor, f, p)) return false;
    } while (next_tail(tail, p));
  }
  return true;
}

Poly smallest_irreducible(std::uint64_t p, unsigned k) {
  Poly tail(k, 0);
  do {
    Poly candidate = tail;
    candidate.push_back(1);
    if (poly_irreducible(candidate, p)) return candidate;
  } while (next_tail(tail, p));
  // Irreducible polynomials of every degree exist over every prime field.
  throw std::logic_error("no irreducible polynomial found");
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldPtr Field::make(std::uint64_t p, unsigned k) {
  if (k < 1) throw std::invalid_argument("extension degree must be at least 1");
  if (p > kMaxOrder) throw std::invalid_argument("field order exceeds bound " + std::to_string(kMaxOrder));
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > kMaxOrder / p) throw std::invalid_argument("field order exceeds bound " + std::to_string(kMaxOrder));
    q *= p;
  }
  if (q > kMaxOrder) throw std::invalid_argument("field order exceeds bound " + std::to_string(kMaxOrder));

  Poly modulus;
  if (k == 1) {
    modulus = {0, 1};  // the polynomial x
  } else {
    modulus = smallest_irreducible(p, k);
  }
  return FieldPtr(new Field(p, k, std::move(modulus)));
}

FieldPtr Field::parse(std::string_view designation) {
  const auto caret = designation.find('^');
  std::string_view p_part = designation.substr(0, caret);
  std::string_view k_part = caret == std::string_view::npos ? std::string_view("1")
                                                            : designation.substr(caret + 1);
  std::uint64_t p = 0;
  unsigned k = 0;
  auto [pe, pc] = std::from_chars(p_part.data(), p_part.data() + p_part.size(), p);
  auto [ke, kc] = std::from_chars(k_part.data(), k_part.data() + k_part.size(), k);
  if (pc != std::errc{} || kc != std::errc{} || pe != p_part.data() + p_part.size() ||
      ke != k_part.data() + k_part.size() || p_part.empty() || k_part.empty()) {
    throw ParseError("invalid field designation '" + std::string(designation) + "', expected p^k");
  }
  return make(p, k);
}

Field::Field(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < k_; ++i) q_ *= p_;
  build_tables();
}

std::string Field::designation() const {
  return std::to_string(p_) + "^" + std::to_string(k_);
}

std::vector<std::uint32_t> Field::coeffs_of(std::uint64_t v) const {
  std::vector<std::uint32_t> c(k_);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = static_cast<std::uint32_t>(v % p_);
    v /= p_;
  }
  return c;
}

std::uint64_t Field::element_from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != k_) throw std::invalid_argument("coefficient vector must have length k");
  std::uint64_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw std::invalid_argument("coefficient out of range [0, p)");
    v = v * p_ + coeffs[i];
  }
  return v;
}

std::uint64_t Field::checked(std::uint64_t v) const {
  if (v >= q_) throw std::invalid_argument("element encoding " + std::to_string(v) +
                                           " out of range for field " + designation());
  return v;
}

std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const {
  if (k_ == 1) {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  std::uint64_t out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    out += d * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

std::uint64_t Field::neg(std::uint64_t a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  std::uint64_t out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint64_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

std::uint64_t Field::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t Field::mul_poly(std::uint64_t a, std::uint64_t b) const {
  if (k_ == 1) return (a * b) % p_;
  const Poly ca = coeffs_of(a), cb = coeffs_of(b);
  Poly prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(ca[i]) * cb[j]) % p_);
    }
  }
  Poly rem = poly_rem(std::move(prod), modulus_, p_);
  rem.resize(k_, 0);
  return element_from_coeffs(rem);
}

void Field::build_tables() {
  const std::uint64_t group = q_ - 1;
  // Find a generator of the multiplicative group: an element whose order is
  // not a proper divisor of q-1.
  const auto radicals = prime_divisors(group);
  std::uint64_t g = 1;
  for (std::uint64_t cand = q_ == 2 ? 1 : 2; cand < q_; ++cand) {
    bool primitive = true;
    for (std::uint64_t r : radicals) {
      // exponentiate by squaring through the table-free multiply
      std::uint64_t e = group / r, base = cand, acc = 1;
      while (e > 0) {
        if (e & 1) acc = mul_poly(acc, base);
        base = mul_poly(base, base);
        e >>= 1;
      }
      if (acc == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }

  exp_.assign(group, 0);
  log_.assign(q_, 0);
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    exp_[i] = static_cast<std::uint32_t>(acc);
    log_[acc] = static_cast<std::uint32_t>(i);
    acc = mul_poly(acc, g);
  }
}

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
  const std::uint64_t group = q_ - 1;
  return exp_[s >= group ? s - group : s];
}

std::uint64_t Field::inv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("division by zero in " + designation());
  const std::uint64_t group = q_ - 1;
  const std::uint64_t l = log_[a];
  return exp_[l == 0 ? 0 : group - l];
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t acc = 1;
  while (e > 0) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

namespace {

const Field& require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field || !b.field) throw std::invalid_argument("field element without a field");
  if (!a.field->same_as(*b.field)) {
    throw std::invalid_argument("field mismatch: " + a.field->designation() + " vs " +
                                b.field->designation());
  }
  return *a.field;
}

}  // namespace

FieldElement fe_make(FieldPtr field, std::uint64_t canonical_value) {
  if (!field) throw std::invalid_argument("null field");
  field->checked(canonical_value);
  return FieldElement{std::move(field), canonical_value};
}

FieldElement fe_add(const FieldElement& a, const FieldElement& b) {
  const Field& f = require_same_field(a, b);
  return {a.field, f.add(a.value, b.value)};
}

FieldElement fe_sub(const FieldElement& a, const FieldElement& b) {
  const Field& f = require_same_field(a, b);
  return {a.field, f.sub(a.value, b.value)};
}

FieldElement fe_mul(const FieldElement& a, const FieldElement& b) {
  const Field& f = require_same_field(a, b);
  return {a.field, f.mul(a.value, b.value)};
}

FieldElement fe_neg(const FieldElement& a) {
  if (!a.field) throw std::invalid_argument("field element without a field");
  return {a.field, a.field->neg(a.value)};
}

FieldElement fe_inv(const FieldElement& a) {
  if (!a.field) throw std::invalid_argument("field element without a field");
  return {a.field, a.field->inv(a.value)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return require_same_field(a, b), a.value == b.value;
}

}  // namespace sumnet
