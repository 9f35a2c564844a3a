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

#include "charset.hpp"

#include <algorithm>
#include <stdexcept>

#include "field.hpp"

namespace sumnet {

CharSet CharSet::all_primes() {
  CharSet s;
  s.all_ = true;
  return s;
}

CharSet CharSet::empty_set() { return CharSet{}; }

CharSet CharSet::finite(std::vector<std::uint64_t> primes) {
  for (std::uint64_t p : primes) {
    if (!is_prime(p))
      throw std::invalid_argument("characteristic set member " + std::to_string(p) + " is not prime");
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  CharSet s;
  s.primes_ = std::move(primes);
  return s;
}

const std::vector<std::uint64_t>& CharSet::primes() const {
  if (all_) throw std::logic_error("the all-primes set has no finite enumeration");
  return primes_;
}

bool CharSet::contains(std::uint64_t p) const {
  if (all_) return is_prime(p);
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::string CharSet::format() const {
  if (all_) return "all";
  if (primes_.empty()) return "∅";
  std::string out = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(primes_[i]);
  }
  out += "}";
  return out;
}

bool operator==(const CharSet& a, const CharSet& b) {
  if (a.is_all_primes() || b.is_all_primes()) return a.is_all_primes() == b.is_all_primes();
  return a.primes() == b.primes();
}

CharSet charset_intersect(const CharSet& a, const CharSet& b) {
  if (a.is_all_primes()) return b;
  if (b.is_all_primes()) return a;
  std::vector<std::uint64_t> out;
  std::set_intersection(a.primes().begin(), a.primes().end(), b.primes().begin(),
                        b.primes().end(), std::back_inserter(out));
  return CharSet::finite(std::move(out));
}

CharSet prime_factors(std::uint64_t n) {
  if (n == 0) return CharSet::all_primes();
  std::vector<std::uint64_t> factors;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  return CharSet::finite(std::move(factors));
}

CharSet s_network_charset(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("S network requires m >= 2");
  return prime_factors(m - 2);
}

CharSet analytic_charset(const NetSpec& spec) {
  switch (spec.kind) {
    case NetSpec::Kind::S:
      return s_network_charset(spec.m);
    case NetSpec::Kind::K:
      return CharSet::all_primes();
    case NetSpec::Kind::Cross:
      return charset_intersect(analytic_charset(*spec.left), analytic_charset(*spec.right));
  }
  throw std::logic_error("unknown spec kind");
}

}  // namespace sumnet
