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

#ifndef SUMNET_ERRORS_HPP
#define SUMNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sumnet {

/// Malformed textual input: network expressions, field designations, JSON documents.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A feasibility search whose assignment space exceeds the configured budget.
/// Carries the exact space size so callers can report what would be required.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string required_space, std::uint64_t budget)
      : std::runtime_error("search space of " + required_space +
                           " assignments exceeds budget " + std::to_string(budget)),
        required_space_(std::move(required_space)),
        budget_(budget) {}

  const std::string& required_space() const { return required_space_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::string required_space_;
  std::uint64_t budget_;
};

}  // namespace sumnet

#endif  // SUMNET_ERRORS_HPP
