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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "charset.hpp"
#include "coding.hpp"
#include "errors.hpp"
#include "netspec.hpp"
#include "search.hpp"

using namespace sumnet;

namespace {

int g_failures = 0;

void report(int number, const std::string& label, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++g_failures;
}

SearchOptions options(SearchMode mode) {
  SearchOptions o;
  o.mode = mode;
  return o;  // default budget (10^8), one worker, seed 0
}

// ---- criterion 1: the three-source instance is infeasible everywhere ----

void criterion_1() {
  const Network s3 = build_s_network(3);
  bool ok = true;
  std::string detail;
  const std::pair<const char*, SearchMode> runs[] = {
      {"2^1", SearchMode::Full},
      {"3^1", SearchMode::Full},
      {"2^2", SearchMode::Normalized},
      {"5^1", SearchMode::Normalized},
  };
  for (const auto& [designation, mode] : runs) {
    const auto verdict = brute_force_feasible(s3, Field::parse(designation), options(mode));
    ok = ok && !verdict.feasible;
    if (!detail.empty()) detail += ", ";
    detail += std::string(designation) + ":" + (verdict.feasible ? "feasible!" : "infeasible") +
              "(space " + verdict.space_size + ")";
  }
  report(1, "S_3 admits no sum code over GF(2), GF(3), GF(4), GF(5)", ok, detail);
}

// ---- criterion 2: oracle verdicts track the divisibility rule ----

void criterion_2() {
  struct Run {
    std::uint64_t m;
    const char* field;
    bool expected;
  };
  const Run runs[] = {{4, "2^1", true}, {4, "2^2", true},  {4, "3^1", false},
                      {5, "3^1", true}, {5, "2^1", false}, {5, "5^1", false}};
  bool ok = true;
  std::string detail;
  for (const Run& run : runs) {
    const auto field = Field::parse(run.field);
    const auto verdict = brute_force_feasible(build_s_network(run.m), field,
                                              options(SearchMode::Normalized));
    const bool divides = (run.m - 2) % field->characteristic() == 0;
    const bool here = verdict.feasible == run.expected && verdict.feasible == divides;
    ok = ok && here;
    if (!detail.empty()) detail += ", ";
    detail += "S_" + std::to_string(run.m) + "/" + run.field + ":" +
              (verdict.feasible ? "feasible" : "infeasible") + (here ? "" : "(MISMATCH)");
  }
  report(2, "search verdicts equal characteristic | m-2 on S_4 and S_5", ok, detail);
}

// ---- criterion 3: identity coding with all-ones decoding ----

void criterion_3() {
  bool ok = true;
  std::string first_bad;
  for (std::uint64_t m = 3; m <= 12; ++m) {
    const Network net = build_s_network(m);
    for (const char* designation : {"2^1", "3^1", "2^2", "5^1", "7^1"}) {
      const auto field = Field::parse(designation);
      const LinearCode code = identity_code(net, field, 1);
      const DecoderSpec decoders = all_ones_decoder(net, field, 1);
      const bool verified = verify_sum_code(net, code, decoders, 100, 0);
      const bool divides = (m - 2) % field->characteristic() == 0;
      if (verified != divides && first_bad.empty())
        first_bad = "m=" + std::to_string(m) + " field=" + designation;
      ok = ok && verified == divides;
    }
  }
  report(3, "identity code + all-ones decoder works exactly when characteristic | m-2", ok,
         ok ? "m=3..12 over GF(2), GF(3), GF(4), GF(5), GF(7)" : first_bad);
}

// ---- criterion 4: composition with a broadcast pair ----

void criterion_4() {
  const auto f2 = Field::make(2, 1);
  const Network a = crisscross(build_s_network(3), build_complete_bipartite(1, 1));
  const Network b = crisscross(build_s_network(4), build_complete_bipartite(1, 1));
  const auto va = brute_force_feasible(a, f2, options(SearchMode::Normalized));
  const auto vb = brute_force_feasible(b, f2, options(SearchMode::Normalized));
  const bool analytic_a = analytic_charset(NetSpec::parse("X(S(3),K(1,1))")).contains(2);
  const bool analytic_b = analytic_charset(NetSpec::parse("X(S(4),K(1,1))")).contains(2);
  const bool ok = !va.feasible && vb.feasible && va.feasible == analytic_a &&
                  vb.feasible == analytic_b;
  report(4, "crisscross with K(1,1) preserves the verdict over GF(2)", ok,
         "X(S(3),K(1,1)):" + std::string(va.feasible ? "feasible!" : "infeasible") +
             ", X(S(4),K(1,1)):" + (vb.feasible ? "feasible" : "infeasible!"));
}

// ---- criterion 5: composition arithmetic ----

void criterion_5() {
  bool ok = true;
  for (std::uint64_t m = 3; m <= 30 && ok; ++m) {
    for (std::uint64_t n = 3; n <= 30 && ok; ++n) {
      const NetSpec spec = NetSpec::parse("X(S(" + std::to_string(m) + "),S(" +
                                          std::to_string(n) + "))");
      ok = analytic_charset(spec) == prime_factors(std::gcd(m - 2, n - 2));
    }
  }
  report(5, "charset of S_m x S_n compositions equals the gcd factorization, 3 <= m,n <= 30", ok,
         "784 pairs");
}

// ---- criterion 6: property suites ----

bool axioms_hold() {
  for (const char* designation : {"2^1", "3^1", "2^2", "5^1", "7^1"}) {
    const auto f = Field::parse(designation);
    std::mt19937_64 rng(0);
    for (int i = 0; i < 1000; ++i) {
      const std::uint64_t a = f->random_element(rng), b = f->random_element(rng),
                          c = f->random_element(rng);
      if (f->add(a, b) != f->add(b, a)) return false;
      if (f->mul(a, b) != f->mul(b, a)) return false;
      if (f->add(f->add(a, b), c) != f->add(a, f->add(b, c))) return false;
      if (f->mul(f->mul(a, b), c) != f->mul(a, f->mul(b, c))) return false;
      if (f->mul(a, f->add(b, c)) != f->add(f->mul(a, b), f->mul(a, c))) return false;
      if (f->add(a, 0) != a || f->mul(a, 1) != a) return false;
      if (f->add(a, f->neg(a)) != 0) return false;
      if (a != 0 && f->mul(a, f->inv(a)) != 1) return false;
    }
  }
  return true;
}

bool transfer_propagation_agree() {
  const auto f4 = Field::make(2, 2);
  std::mt19937_64 rng(1);
  for (const char* expr : {"S(3)", "K(2,3)"}) {
    const Network net = realize(NetSpec::parse(expr));
    for (int c = 0; c < 100; ++c) {
      const LinearCode code = random_code(net, f4, 1, rng);
      const TransferVector tv = transfer(net, code);
      for (int i = 0; i < 100; ++i) {
        std::vector<FieldMatrix> inputs;
        for (std::size_t s = 0; s < net.sources().size(); ++s) {
          FieldMatrix x(f4, 1, 1);
          x.set(0, 0, f4->random_element(rng));
          inputs.push_back(std::move(x));
        }
        const auto carried = propagate(net, code, inputs);
        for (std::size_t e = 0; e < carried.size(); ++e) {
          FieldMatrix acc(f4, 1, 1);
          for (std::size_t j = 0; j < inputs.size(); ++j)
            acc = mat_add(acc, mat_mul(tv.per_edge[e][j], inputs[j]));
          if (!(acc == carried[e])) return false;
        }
      }
    }
  }
  return true;
}

// Full and normalized verdicts must agree on every criterion-1/2 instance
// whose full assignment space fits the default budget.
bool normalization_sound(std::string& detail) {
  struct Instance {
    std::uint64_t m;
    const char* field;
  };
  const Instance instances[] = {{3, "2^1"}, {3, "3^1"}, {4, "2^1"}};
  for (const Instance& inst : instances) {
    const Network net = build_s_network(inst.m);
    const auto field = Field::parse(inst.field);
    const auto full = brute_force_feasible(net, field, options(SearchMode::Full));
    const auto normalized = brute_force_feasible(net, field, options(SearchMode::Normalized));
    if (!detail.empty()) detail += ", ";
    detail += "S_" + std::to_string(inst.m) + "/" + inst.field + ":" +
              (full.feasible ? "feasible" : "infeasible") + "=" +
              (normalized.feasible ? "feasible" : "infeasible");
    if (full.feasible != normalized.feasible) return false;
  }
  return true;
}

bool serialization_byte_exact() {
  for (const char* expr : {"S(3)", "K(2,3)", "X(S(4),K(2,3))", "X(X(S(3),S(4)),K(1,2))"}) {
    const Network net = realize(NetSpec::parse(expr));
    const std::string text = serialize(net);
    if (serialize(deserialize(text)) != text) return false;
  }
  const Network s3 = build_s_network(3);
  const auto f4 = Field::make(2, 2);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 5; ++i) {
    const LinearCode code = random_code(s3, f4, 1, rng);
    const std::string text = code_to_json(s3, code);
    if (code_to_json(s3, code_from_json(s3, text)) != text) return false;
  }
  const auto verdict =
      brute_force_feasible(build_s_network(4), Field::make(2, 1), options(SearchMode::Normalized));
  const auto again =
      brute_force_feasible(build_s_network(4), Field::make(2, 1), options(SearchMode::Normalized));
  return verdict_to_json(verdict) == verdict_to_json(again);
}

void criterion_6() {
  const bool axioms = axioms_hold();
  const bool agreement = transfer_propagation_agree();
  std::string soundness_detail;
  const bool soundness = normalization_sound(soundness_detail);
  const bool round_trips = serialization_byte_exact();
  const bool ok = axioms && agreement && soundness && round_trips;
  report(6, "property suites", ok,
         std::string("axioms:") + (axioms ? "ok" : "FAIL") +
             ", transfer/propagate:" + (agreement ? "ok" : "FAIL") +
             ", full=normalized on " + soundness_detail + (soundness ? "" : " FAIL") +
             ", round-trips:" + (round_trips ? "ok" : "FAIL"));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  std::printf("acceptance: %d/6 criteria passed\n", 6 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
