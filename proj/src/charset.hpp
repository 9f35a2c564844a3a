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

#ifndef SUMNET_CHARSET_HPP
#define SUMNET_CHARSET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "netspec.hpp"

namespace sumnet {

/// A set of field characteristics: either every prime, or a finite set of
/// primes kept in ascending order. Intersection treats the all-primes value
/// as its identity and the empty set as absorbing.
class CharSet {
 public:
  static CharSet all_primes();
  static CharSet empty_set();
  static CharSet finite(std::vector<std::uint64_t> primes);  // validates primality

  bool is_all_primes() const { return all_; }
  bool is_empty() const { return !all_ && primes_.empty(); }
  const std::vector<std::uint64_t>& primes() const;  // finite sets only
  bool contains(std::uint64_t p) const;

  /// "all", "∅", or "{p1,p2,...}" ascending.
  std::string format() const;

 private:
  bool all_ = false;
  std::vector<std::uint64_t> primes_;
};

bool operator==(const CharSet& a, const CharSet& b);
inline bool operator!=(const CharSet& a, const CharSet& b) { return !(a == b); }

CharSet charset_intersect(const CharSet& a, const CharSet& b);

/// Prime factors of n; n = 0 maps to the all-primes set (every prime divides
/// zero) and n = 1 to the empty set.
CharSet prime_factors(std::uint64_t n);

/// Characteristics over which the m-source four-layer network admits a
/// sum-communicating linear code: the prime factors of m - 2.
CharSet s_network_charset(std::uint64_t m);  // m >= 2

/// Recursive evaluation over a construction expression: S(m) contributes the
/// factors of m - 2, K(m,n) all primes, X(a,b) the intersection.
CharSet analytic_charset(const NetSpec& spec);

}  // namespace sumnet

#endif  // SUMNET_CHARSET_HPP
