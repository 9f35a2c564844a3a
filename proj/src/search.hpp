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

#ifndef SUMNET_SEARCH_HPP
#define SUMNET_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charset.hpp"
#include "coding.hpp"
#include "netspec.hpp"
#include "network.hpp"

namespace sumnet {

/// Full enumerates every scalar coefficient. Normalized pins all source
/// coefficients and every coefficient at single-input relays to 1 and
/// enumerates only the rest; any code in the full space reduces to one in the
/// normalized space by absorbing the pinned factors into the solved decoders,
/// so the verdict is the same wherever both complete.
enum class SearchMode { Full, Normalized };

std::string_view search_mode_name(SearchMode mode);
SearchMode search_mode_from_name(std::string_view name);  // throws ParseError

struct SearchOptions {
  SearchMode mode = SearchMode::Full;
  std::uint64_t budget = 100'000'000;  // maximum assignments to enumerate
  unsigned jobs = 1;
  std::uint64_t seed = 0;  // for the witness verification trials
};

struct FeasibilityVerdict {
  bool feasible = false;
  std::shared_ptr<const Network> network;  // the instance that was searched
  FieldPtr field;
  SearchMode mode = SearchMode::Full;
  std::string space_size;                  // exact decimal assignment count
  std::uint64_t assignments_examined = 0;  // single-threaded-scan equivalent
  std::optional<LinearCode> witness_code;
  std::optional<DecoderSpec> witness_decoders;
};

/// Decides scalar (N = 1) sum-feasibility by enumerating coefficient
/// assignments in lexicographic order — coefficient slots follow the edge
/// list, values ascend by canonical encoding — and solving each assignment's
/// decoders. Decoders are always solved, never enumerated. Returns the
/// lexicographically least witness or an exhausted-search verdict; the result
/// is identical for any job count. Throws BudgetExceeded before enumerating
/// if the space is larger than the budget.
FeasibilityVerdict brute_force_feasible(const Network& net, FieldPtr field,
                                        const SearchOptions& options);

std::string verdict_to_json(const FeasibilityVerdict& verdict);

struct FieldAgreement {
  std::string field;
  bool oracle_feasible = false;
  bool analytic_member = false;
  bool agree = false;
};

struct CrossValidationReport {
  std::string spec;
  std::string charset;
  std::vector<FieldAgreement> rows;
  bool all_agree = true;
};

/// Runs the exhaustive oracle for every field and compares each verdict
/// against membership of the field's characteristic in the expression's
/// analytic characteristic set. Disagreements are reported, never reconciled.
CrossValidationReport cross_validate(const NetSpec& spec, const std::vector<FieldPtr>& fields,
                                     const SearchOptions& options);

std::string format_report(const CrossValidationReport& report);

/// Exact base^exponent as a decimal string.
std::string pow_decimal(std::uint64_t base, std::size_t exponent);

}  // namespace sumnet

#endif  // SUMNET_SEARCH_HPP
