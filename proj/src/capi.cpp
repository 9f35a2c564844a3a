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

#include "sumnet/sumnet.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "charset.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "netspec.hpp"
#include "network.hpp"
#include "search.hpp"

struct sumnet_field {
  sumnet::FieldPtr field;
};

struct sumnet_network {
  sumnet::Network net;
};

struct sumnet_verdict {
  sumnet::FeasibilityVerdict verdict;
};

namespace {

thread_local std::string g_last_error;

sumnet_status fail(sumnet_status status, const char* what) {
  g_last_error = what;
  return status;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs a callable, translating exceptions into status codes.
template <typename Fn>
sumnet_status guarded(Fn&& fn) {
  try {
    fn();
    return SUMNET_OK;
  } catch (const sumnet::BudgetExceeded& e) {
    return fail(SUMNET_ERR_BUDGET_EXCEEDED, e.what());
  } catch (const sumnet::ParseError& e) {
    return fail(SUMNET_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SUMNET_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(SUMNET_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SUMNET_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SUMNET_ERR_INTERNAL, "unknown error");
  }
}

sumnet_status require(bool ok, const char* what) {
  return ok ? SUMNET_OK : fail(SUMNET_ERR_INVALID_ARGUMENT, what);
}

constexpr std::uint64_t kDefaultBudget = 100'000'000;

sumnet::SearchOptions make_options(sumnet_search_mode mode, uint64_t budget, uint32_t jobs,
                                   uint64_t seed) {
  sumnet::SearchOptions options;
  options.mode =
      mode == SUMNET_MODE_NORMALIZED ? sumnet::SearchMode::Normalized : sumnet::SearchMode::Full;
  options.budget = budget == 0 ? kDefaultBudget : budget;
  options.jobs = jobs == 0 ? 1 : jobs;
  options.seed = seed;
  return options;
}

}  // namespace

extern "C" {

const char* sumnet_version(void) { return "1.0.0"; }

const char* sumnet_last_error(void) { return g_last_error.c_str(); }

void sumnet_string_free(char* s) { std::free(s); }

/* ---- fields -------------------------------------------------------- */

sumnet_status sumnet_field_make(uint64_t p, uint32_t k, sumnet_field** out) {
  if (require(out != nullptr, "null out parameter")) return SUMNET_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new sumnet_field{sumnet::Field::make(p, k)}; });
}

sumnet_status sumnet_field_parse(const char* designation, sumnet_field** out) {
  if (require(designation && out, "null argument")) return SUMNET_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new sumnet_field{sumnet::Field::parse(designation)}; });
}

void sumnet_field_free(sumnet_field* field) { delete field; }

uint64_t sumnet_field_characteristic(const sumnet_field* field) {
  return field ? field->field->characteristic() : 0;
}

uint32_t sumnet_field_degree(const sumnet_field* field) {
  return field ? field->field->degree() : 0;
}

uint64_t sumnet_field_order(const sumnet_field* field) {
  return field ? field->field->order() : 0;
}

sumnet_status sumnet_field_designation(const sumnet_field* field, char** out) {
  if (require(field && out, "null argument")) return SUMNET_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = dup_string(field->field->designation()); });
}

/* ---- networks ------------------------------------------------------ */

sumnet_status sumnet_network_from_expr(const char* expr, sumnet_network** out) {
  if (require(expr && out, "null argument")) return SUMNET_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new sumnet_network{sumnet::realize(sumnet::NetSpec::parse(expr))};
  });
}

sumnet_status sumnet_network_from_json(const char* json_text, sumnet_network** out) {
  if (require(json_text && out, "null argument")) return SUMNET_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new sumnet_network{sumnet::deserialize(json_text)}; });
}

sumnet_status sumnet_network_from_file(const char* path, sumnet_network** out) {
  if (require(path && out, "null argument")) return SUMNET_ERR_INVALID_ARGUMENT;
  std::ifstream in(path);
  if (!in) return fail(SUMNET_ERR_IO, ("cannot open '" + std::string(path) + "'").c_str());
  std::ostringstream text;
  text << in.rdbuf();
  return sumnet_network_from_json(text.str().c_str(), out);
}

void sumnet_network_free(sumnet_network* net) { delete net; }

size_t sumnet_network_node_count(const sumnet_network* net) {
  return net ? net->net.nodes().size() : 0;
}

size_t sumnet_network_edge_count(const sumnet_network* net) {
  return net ? net->net.edges().size() : 0;
}

size_t sumnet_network_source_count(const sumnet_network* net) {
  return net ? net->net.sources().size() : 0;
}

size_t sumnet_network_terminal_count(const sumnet_network* net) {
  return net ? net->net.terminals().size() : 0;
}

const char* sumnet_network_name(const sumnet_network* net) {
  return net ? net->net.name().c_str() : "";
}

int sumnet_network_all_pairs_connected(const sumnet_network* net) {
  return net && sumnet::all_pairs_connected(net->net) ? 1 : 0;
}

sumnet_status sumnet_network_to_json(const sumnet_network* net, char** out) {
  if (require(net && out, "null argument")) return SUMNET_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = dup_string(sumnet::serialize(net->net)); });
}

sumnet_status sumnet_network_to_dot(const sumnet_network* net, char** out) {
  if (require(net && out, "null argument")) return SUMNET_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = dup_string(sumnet::export_dot(net->net)); });
}

/* ---- characteristic sets ------------------------------------------- */

sumnet_status sumnet_charset_format(const char* expr, char** out) {
  if (require(expr && out, "null argument")) return SUMNET_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = dup_string(sumnet::analytic_charset(sumnet::NetSpec::parse(expr)).format());
  });
}

sumnet_status sumnet_charset_primes(const char* expr, int* all_primes, uint64_t* primes,
                                    size_t capacity, size_t* count) {
  if (require(expr && all_primes && count, "null argument")) return SUMNET_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const sumnet::CharSet set = sumnet::analytic_charset(sumnet::NetSpec::parse(expr));
    if (set.is_all_primes()) {
      *all_primes = 1;
      *count = 0;
      return;
    }
    *all_primes = 0;
    *count = set.primes().size();
    if (primes) {
      for (size_t i = 0; i < set.primes().size() && i < capacity; ++i) primes[i] = set.primes()[i];
    }
  });
}

/* ---- feasibility --------------------------------------------------- */

sumnet_status sumnet_feasibility_check(const sumnet_network* net, const sumnet_field* field,
                                       sumnet_search_mode mode, uint64_t budget, uint32_t jobs,
                                       uint64_t seed, sumnet_verdict** out) {
  if (require(net && field && out, "null argument")) return SUMNET_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new sumnet_verdict{sumnet::brute_force_feasible(
        net->net, field->field, make_options(mode, budget, jobs, seed))};
  });
}

void sumnet_verdict_free(sumnet_verdict* verdict) { delete verdict; }

int sumnet_verdict_feasible(const sumnet_verdict* verdict) {
  return verdict && verdict->verdict.feasible ? 1 : 0;
}

sumnet_status sumnet_verdict_space_size(const sumnet_verdict* verdict, char** out) {
  if (require(verdict && out, "null argument")) return SUMNET_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = dup_string(verdict->verdict.space_size); });
}

uint64_t sumnet_verdict_assignments_examined(const sumnet_verdict* verdict) {
  return verdict ? verdict->verdict.assignments_examined : 0;
}

sumnet_status sumnet_verdict_to_json(const sumnet_verdict* verdict, char** out) {
  if (require(verdict && out, "null argument")) return SUMNET_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = dup_string(sumnet::verdict_to_json(verdict->verdict)); });
}

sumnet_status sumnet_verdict_witness_json(const sumnet_verdict* verdict, char** out) {
  if (require(verdict && out, "null argument")) return SUMNET_ERR_INVALID_ARGUMENT;
  if (!verdict->verdict.feasible)
    return fail(SUMNET_ERR_INVALID_ARGUMENT, "infeasible verdict has no witness");
  return guarded([&] {
    *out = dup_string(
        sumnet::code_to_json(*verdict->verdict.network, *verdict->verdict.witness_code));
  });
}

sumnet_status sumnet_cross_validate(const char* expr, const char* fields_csv,
                                    sumnet_search_mode mode, uint64_t budget, uint32_t jobs,
                                    uint64_t seed, char** report_out, int* all_agree) {
  if (require(expr && fields_csv && report_out && all_agree, "null argument"))
    return SUMNET_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    std::vector<sumnet::FieldPtr> fields;
    std::string csv(fields_csv);
    std::size_t start = 0;
    while (start <= csv.size()) {
      const std::size_t comma = csv.find(',', start);
      const std::string part =
          csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!part.empty()) fields.push_back(sumnet::Field::parse(part));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.empty()) throw sumnet::ParseError("no field designations given");

    const sumnet::CrossValidationReport report = sumnet::cross_validate(
        sumnet::NetSpec::parse(expr), fields, make_options(mode, budget, jobs, seed));
    *report_out = dup_string(sumnet::format_report(report));
    *all_agree = report.all_agree ? 1 : 0;
  });
}

} /* extern "C" */
