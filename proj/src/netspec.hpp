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

#ifndef SUMNET_NETSPEC_HPP
#define SUMNET_NETSPEC_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "network.hpp"

namespace sumnet {

/// Construction expression for the supported network families:
///   S(m)        four-layer relay network, m >= 2
///   K(m,n)      complete bipartite, m, n >= 1
///   X(a,b)      crisscross composition of two expressions
/// Text form is whitespace-insensitive and case-insensitive in the letters.
struct NetSpec {
  enum class Kind { S, K, Cross };

  Kind kind = Kind::S;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::unique_ptr<NetSpec> left, right;

  static constexpr std::uint64_t kMaxParam = 1024;

  static NetSpec parse(std::string_view text);  // throws ParseError
  std::string to_string() const;                // canonical, e.g. "X(S(4),K(2,3))"
};

/// Builds the concrete network an expression denotes. Node naming is
/// deterministic: leaves use their layer names, compositions prefix "L."/"R.".
Network realize(const NetSpec& spec);

}  // namespace sumnet

#endif  // SUMNET_NETSPEC_HPP
