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

#include "search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "errors.hpp"

namespace sumnet {

std::string_view search_mode_name(SearchMode mode) {
  return mode == SearchMode::Full ? "full" : "normalized";
}

SearchMode search_mode_from_name(std::string_view name) {
  if (name == "full") return SearchMode::Full;
  if (name == "normalized") return SearchMode::Normalized;
  throw ParseError("unknown search mode '" + std::string(name) + "'");
}

std::string pow_decimal(std::uint64_t base, std::size_t exponent) {
  constexpr std::uint64_t kLimb = 1'000'000'000;  // base-10^9 limbs, little endian
  std::vector<std::uint64_t> limbs{1};
  for (std::size_t i = 0; i < exponent; ++i) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs) {
      const std::uint64_t v = limb * base + carry;
      limb = v % kLimb;
      carry = v / kLimb;
    }
    while (carry > 0) {
      limbs.push_back(carry % kLimb);
      carry /= kLimb;
    }
  }
  std::string out = std::to_string(limbs.back());
  for (std::size_t i = limbs.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

namespace {

// One scalar coefficient of a code: either a source coefficient of out_edge
// or the local coefficient applied to in_edge when forming out_edge.
struct Slot {
  bool is_alpha;
  std::size_t out_edge;
  std::size_t in_edge;  // meaningful for local coefficients only
};

// The enumeration plan: slots in canonical order (outgoing edges in edge-list
// order; a relay edge's inputs in ascending edge order), with the subset left
// free by the mode. Assignment i maps to free-slot digits of i written in
// base q, first free slot most significant, so ascending i is lexicographic
// order over assignments.
struct SlotPlan {
  std::vector<Slot> slots;
  std::vector<std::uint64_t> base_values;  // pinned values; free slots start at 0
  std::vector<std::size_t> free_slots;
};

SlotPlan build_plan(const Network& net, SearchMode mode) {
  SlotPlan plan;
  for (std::size_t e = 0; e < net.edges().size(); ++e) {
    const std::size_t tail = net.edges()[e].tail;
    if (net.is_source(tail)) {
      plan.slots.push_back({true, e, 0});
    } else {
      for (std::size_t in : net.in_edges(tail)) plan.slots.push_back({false, e, in});
    }
  }
  plan.base_values.assign(plan.slots.size(), 0);
  for (std::size_t i = 0; i < plan.slots.size(); ++i) {
    const Slot& s = plan.slots[i];
    bool pinned = false;
    if (mode == SearchMode::Normalized) {
      pinned = s.is_alpha || net.in_edges(net.edges()[s.out_edge].tail).size() == 1;
    }
    if (pinned) {
      plan.base_values[i] = 1;
    } else {
      plan.free_slots.push_back(i);
    }
  }
  return plan;
}

// Scalar (N = 1) evaluation of one assignment: compute per-edge net source
// coefficients in topological order, then check that every terminal's
// decoding system is consistent. Buffers are reused across assignments.
class ScalarEvaluator {
 public:
  ScalarEvaluator(const Network& net, const Field& field, const SlotPlan& plan)
      : field_(field),
        source_count_(net.sources().size()),
        transfer_(net.edges().size() * net.sources().size()) {
    std::vector<std::size_t> src_of(net.nodes().size(), SIZE_MAX);
    for (std::size_t i = 0; i < source_count_; ++i) src_of[net.sources()[i]] = i;

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> beta_slot;
    std::vector<std::size_t> alpha_slot(net.edges().size(), SIZE_MAX);
    for (std::size_t i = 0; i < plan.slots.size(); ++i) {
      const Slot& s = plan.slots[i];
      if (s.is_alpha)
        alpha_slot[s.out_edge] = i;
      else
        beta_slot.emplace(std::make_pair(s.in_edge, s.out_edge), i);
    }

    for (std::size_t n : net.topo_order()) {
      for (std::size_t e : net.out_edges(n)) {
        EdgeStep step;
        step.edge = e;
        if (net.is_source(n)) {
          step.source = src_of[n];
          step.slot = alpha_slot[e];
        } else {
          step.source = SIZE_MAX;
          for (std::size_t in : net.in_edges(n))
            step.terms.push_back({in, beta_slot.at({in, e})});
        }
        steps_.push_back(std::move(step));
      }
    }

    std::size_t max_deg = 1;
    for (std::size_t t : net.terminals()) {
      terminals_.push_back(net.in_edges(t));
      max_deg = std::max(max_deg, net.in_edges(t).size());
    }
    scratch_.resize(source_count_ * (max_deg + 1));
  }

  bool feasible(const std::vector<std::uint64_t>& values) {
    const std::size_t m = source_count_;
    for (const EdgeStep& step : steps_) {
      std::uint64_t* row = &transfer_[step.edge * m];
      if (step.source != SIZE_MAX) {
        for (std::size_t j = 0; j < m; ++j) row[j] = 0;
        row[step.source] = values[step.slot];
      } else {
        for (std::size_t j = 0; j < m; ++j) row[j] = 0;
        for (const Term& term : step.terms) {
          const std::uint64_t coeff = values[term.slot];
          if (coeff == 0) continue;
          const std::uint64_t* in_row = &transfer_[term.in_edge * m];
          for (std::size_t j = 0; j < m; ++j) {
            if (in_row[j] != 0) row[j] = field_.add(row[j], field_.mul(coeff, in_row[j]));
          }
        }
      }
    }
    for (const auto& in_edges : terminals_) {
      if (!terminal_solvable(in_edges)) return false;
    }
    return true;
  }

 private:
  struct Term {
    std::size_t in_edge;
    std::size_t slot;
  };
  struct EdgeStep {
    std::size_t edge = 0;
    std::size_t source = SIZE_MAX;  // SIZE_MAX for relay-tail edges
    std::size_t slot = SIZE_MAX;    // alpha slot when source-tail
    std::vector<Term> terms;
  };

  // Consistency of the m × d system  Σ_i T[e_i][j]·γ_i = 1 for every j.
  bool terminal_solvable(const std::vector<std::size_t>& in_edges) {
    const std::size_t m = source_count_, d = in_edges.size(), w = d + 1;
    if (d == 0) return false;
    std::uint64_t* a = scratch_.data();
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < d; ++i) a[j * w + i] = transfer_[in_edges[i] * m + j];
      a[j * w + d] = 1;
    }
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < d && pivot_row < m; ++col) {
      std::size_t sel = pivot_row;
      while (sel < m && a[sel * w + col] == 0) ++sel;
      if (sel == m) continue;
      if (sel != pivot_row)
        for (std::size_t c = col; c < w; ++c) std::swap(a[sel * w + c], a[pivot_row * w + c]);
      const std::uint64_t scale = field_.inv(a[pivot_row * w + col]);
      for (std::size_t c = col; c < w; ++c)
        a[pivot_row * w + c] = field_.mul(a[pivot_row * w + c], scale);
      for (std::size_t r = 0; r < m; ++r) {
        if (r == pivot_row) continue;
        const std::uint64_t factor = a[r * w + col];
        if (factor == 0) continue;
        for (std::size_t c = col; c < w; ++c)
          a[r * w + c] = field_.sub(a[r * w + c], field_.mul(factor, a[pivot_row * w + c]));
      }
      ++pivot_row;
    }
    for (std::size_t r = pivot_row; r < m; ++r) {
      if (a[r * w + d] != 0) return false;
    }
    return true;
  }

  const Field& field_;
  std::size_t source_count_;
  std::vector<EdgeStep> steps_;
  std::vector<std::vector<std::size_t>> terminals_;
  std::vector<std::uint64_t> transfer_;
  std::vector<std::uint64_t> scratch_;
};

// Writes the free-slot digits of `index` (base q, first slot most
// significant) into the value vector.
void apply_index(const SlotPlan& plan, std::uint64_t q, std::uint64_t index,
                 std::vector<std::uint64_t>& values) {
  for (std::size_t i = plan.free_slots.size(); i-- > 0;) {
    values[plan.free_slots[i]] = index % q;
    index /= q;
  }
}

// Advances the free-slot digits to the next assignment.
void advance(const SlotPlan& plan, std::uint64_t q, std::vector<std::uint64_t>& values) {
  for (std::size_t i = plan.free_slots.size(); i-- > 0;) {
    std::uint64_t& v = values[plan.free_slots[i]];
    if (++v < q) return;
    v = 0;
  }
}

LinearCode code_from_values(const Network& net, const FieldPtr& field, const SlotPlan& plan,
                            const std::vector<std::uint64_t>& values) {
  LinearCode code{field, 1, {}, {}};
  for (std::size_t i = 0; i < plan.slots.size(); ++i) {
    const Slot& s = plan.slots[i];
    FieldMatrix coeff(field, 1, 1, {values[i]});
    if (s.is_alpha)
      code.alpha.emplace(s.out_edge, std::move(coeff));
    else
      code.beta.emplace(std::make_pair(s.in_edge, s.out_edge), std::move(coeff));
  }
  validate_code(net, code);
  return code;
}

constexpr std::uint64_t kNoWitness = std::numeric_limits<std::uint64_t>::max();

// Scans [begin, end) in ascending order, lowering *best whenever a feasible
// assignment with a smaller index is found. Honors the current *best as an
// upper bound so workers never scan indices that cannot improve it.
void scan_range(const Network& net, const Field& field, const SlotPlan& plan, std::uint64_t q,
                std::uint64_t begin, std::uint64_t end, std::atomic<std::uint64_t>& best) {
  ScalarEvaluator eval(net, field, plan);
  std::vector<std::uint64_t> values = plan.base_values;
  apply_index(plan, q, begin, values);
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    if (idx >= best.load(std::memory_order_relaxed)) return;
    if (eval.feasible(values)) {
      std::uint64_t cur = best.load(std::memory_order_relaxed);
      while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
      }
      return;
    }
    advance(plan, q, values);
  }
}

}  // namespace

FeasibilityVerdict brute_force_feasible(const Network& net, FieldPtr field,
                                        const SearchOptions& options) {
  if (!field) throw std::invalid_argument("feasibility search requires a field");
  if (net.sources().empty()) throw std::invalid_argument("network has no sources");
  if (net.edges().size() * net.sources().size() > 50'000'000)
    throw std::invalid_argument("network too large for exhaustive search");

  const std::uint64_t q = field->order();
  const SlotPlan plan = build_plan(net, options.mode);

  FeasibilityVerdict verdict;
  verdict.network = std::make_shared<Network>(net);
  verdict.field = field;
  verdict.mode = options.mode;
  verdict.space_size = pow_decimal(q, plan.free_slots.size());

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < plan.free_slots.size(); ++i) {
    if (total > options.budget / q) throw BudgetExceeded(verdict.space_size, options.budget);
    total *= q;
  }
  if (total > options.budget) throw BudgetExceeded(verdict.space_size, options.budget);

  std::atomic<std::uint64_t> best{kNoWitness};
  const unsigned jobs = std::min(std::max(1u, options.jobs), 64u);
  if (jobs == 1 || total < 2048) {
    scan_range(net, *field, plan, q, 0, total, best);
  } else {
    const std::uint64_t chunk = std::max<std::uint64_t>(1024, total / (std::uint64_t(jobs) * 64));
    std::atomic<std::uint64_t> next_chunk{0};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&]() {
        for (;;) {
          const std::uint64_t begin = next_chunk.fetch_add(1) * chunk;
          if (begin >= total || begin >= best.load(std::memory_order_acquire)) {
            if (begin >= total) return;
            continue;
          }
          scan_range(net, *field, plan, q, begin, std::min(begin + chunk, total), best);
        }
      });
    }
    for (auto& w : workers) w.join();
  }

  const std::uint64_t hit = best.load();
  if (hit == kNoWitness) {
    verdict.feasible = false;
    verdict.assignments_examined = total;
    return verdict;
  }

  verdict.feasible = true;
  verdict.assignments_examined = hit + 1;
  std::vector<std::uint64_t> values = plan.base_values;
  apply_index(plan, q, hit, values);
  verdict.witness_code = code_from_values(net, field, plan, values);
  const DecoderSolveOutcome decoders = solve_decoders(net, *verdict.witness_code);
  if (!decoders.feasible)
    throw std::logic_error("witness assignment lost its decoders on reconstruction");
  verdict.witness_decoders = decoders.decoders;
  if (!verify_sum_code(net, *verdict.witness_code, *verdict.witness_decoders, 100, options.seed))
    throw std::logic_error("witness failed verification");
  return verdict;
}

std::string verdict_to_json(const FeasibilityVerdict& verdict) {
  nlohmann::ordered_json doc;
  doc["network"] = verdict.network->name();
  doc["field"] = verdict.field->designation();
  doc["n"] = 1;
  doc["mode"] = std::string(search_mode_name(verdict.mode));
  doc["outcome"] = verdict.feasible ? "feasible" : "infeasible";
  doc["search_space"] = verdict.space_size;
  doc["assignments_examined"] = verdict.assignments_examined;
  if (verdict.feasible) {
    doc["witness"]["code"] =
        nlohmann::ordered_json::parse(code_to_json(*verdict.network, *verdict.witness_code));
    doc["witness"]["decoders"] = nlohmann::ordered_json::parse(
        decoders_to_json(*verdict.network, *verdict.witness_decoders));
  }
  return doc.dump(2) + "\n";
}

CrossValidationReport cross_validate(const NetSpec& spec, const std::vector<FieldPtr>& fields,
                                     const SearchOptions& options) {
  CrossValidationReport report;
  report.spec = spec.to_string();
  const CharSet charset = analytic_charset(spec);
  report.charset = charset.format();
  const Network net = realize(spec);

  for (const FieldPtr& field : fields) {
    const FeasibilityVerdict verdict = brute_force_feasible(net, field, options);
    FieldAgreement row;
    row.field = field->designation();
    row.oracle_feasible = verdict.feasible;
    row.analytic_member = charset.contains(field->characteristic());
    row.agree = row.oracle_feasible == row.analytic_member;
    report.all_agree = report.all_agree && row.agree;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string format_report(const CrossValidationReport& report) {
  std::string out = "expression: " + report.spec + "\nanalytic charset: " + report.charset + "\n";
  for (const FieldAgreement& row : report.rows) {
    if (row.agree) {
      out += row.field + ": agree(" + (row.oracle_feasible ? "feasible" : "infeasible") + ")\n";
    } else {
      out += row.field + ": DISAGREE(oracle=" +
             (row.oracle_feasible ? "feasible" : "infeasible") +
             ", analytic=" + (row.analytic_member ? "feasible" : "infeasible") + ")\n";
    }
  }
  out += std::string("result: ") + (report.all_agree ? "all agree" : "disagreement found") + "\n";
  return out;
}

}  // namespace sumnet
