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

#include "coding.hpp"

#include <stdexcept>

#include "json.hpp"

#include "errors.hpp"

namespace sumnet {

namespace {

// Source index (position among sources in node order) for each node, or npos.
std::vector<std::size_t> source_index_by_node(const Network& net) {
  std::vector<std::size_t> idx(net.nodes().size(), SIZE_MAX);
  for (std::size_t i = 0; i < net.sources().size(); ++i) idx[net.sources()[i]] = i;
  return idx;
}

const FieldMatrix& code_alpha(const LinearCode& code, std::size_t edge) {
  const auto it = code.alpha.find(edge);
  if (it == code.alpha.end())
    throw std::invalid_argument("code is missing a source coefficient for edge " +
                                std::to_string(edge));
  return it->second;
}

const FieldMatrix& code_beta(const LinearCode& code, std::size_t in_edge, std::size_t out_edge) {
  const auto it = code.beta.find({in_edge, out_edge});
  if (it == code.beta.end())
    throw std::invalid_argument("code is missing a local coefficient for edge pair (" +
                                std::to_string(in_edge) + "," + std::to_string(out_edge) + ")");
  return it->second;
}

}  // namespace

void validate_code(const Network& net, const LinearCode& code) {
  if (!code.field) throw std::invalid_argument("code requires a field");
  if (code.block < 1) throw std::invalid_argument("block length must be at least 1");

  std::size_t expected_alpha = 0, expected_beta = 0;
  for (std::size_t e = 0; e < net.edges().size(); ++e) {
    const std::size_t tail = net.edges()[e].tail;
    if (net.is_source(tail)) {
      ++expected_alpha;
      code_alpha(code, e);
    } else {
      for (std::size_t in : net.in_edges(tail)) {
        ++expected_beta;
        code_beta(code, in, e);
      }
    }
  }
  if (code.alpha.size() != expected_alpha)
    throw std::invalid_argument("code has extraneous source coefficients");
  if (code.beta.size() != expected_beta)
    throw std::invalid_argument("code has extraneous local coefficients");

  const auto check = [&](const FieldMatrix& m) {
    if (!m.field()->same_as(*code.field))
      throw std::invalid_argument("coefficient field mismatch");
    if (m.rows() != code.block || m.cols() != code.block)
      throw std::invalid_argument("coefficient must be N×N with N = " +
                                  std::to_string(code.block));
  };
  for (const auto& [e, m] : code.alpha) check(m);
  for (const auto& [pair, m] : code.beta) check(m);
}

LinearCode identity_code(const Network& net, FieldPtr field, unsigned block) {
  LinearCode code{std::move(field), block, {}, {}};
  const FieldMatrix eye = FieldMatrix::identity(code.field, block);
  for (std::size_t e = 0; e < net.edges().size(); ++e) {
    const std::size_t tail = net.edges()[e].tail;
    if (net.is_source(tail)) {
      code.alpha.emplace(e, eye);
    } else {
      for (std::size_t in : net.in_edges(tail)) code.beta.emplace(std::make_pair(in, e), eye);
    }
  }
  return code;
}

LinearCode random_code(const Network& net, FieldPtr field, unsigned block, std::mt19937_64& rng) {
  LinearCode code{std::move(field), block, {}, {}};
  const auto random_matrix = [&]() {
    FieldMatrix m(code.field, block, block);
    for (std::size_t r = 0; r < block; ++r)
      for (std::size_t c = 0; c < block; ++c) m.set(r, c, code.field->random_element(rng));
    return m;
  };
  for (std::size_t e = 0; e < net.edges().size(); ++e) {
    const std::size_t tail = net.edges()[e].tail;
    if (net.is_source(tail)) {
      code.alpha.emplace(e, random_matrix());
    } else {
      for (std::size_t in : net.in_edges(tail))
        code.beta.emplace(std::make_pair(in, e), random_matrix());
    }
  }
  return code;
}

DecoderSpec all_ones_decoder(const Network& net, FieldPtr field, unsigned block) {
  DecoderSpec dec;
  const FieldMatrix eye = FieldMatrix::identity(std::move(field), block);
  for (std::size_t t : net.terminals()) {
    auto& per_edge = dec[net.node(t).id];
    for (std::size_t e : net.in_edges(t)) per_edge.emplace(e, eye);
  }
  return dec;
}

std::vector<FieldMatrix> propagate(const Network& net, const LinearCode& code,
                                   const std::vector<FieldMatrix>& source_inputs) {
  validate_code(net, code);
  if (source_inputs.size() != net.sources().size())
    throw std::invalid_argument("expected one input per source, got " +
                                std::to_string(source_inputs.size()));
  for (const FieldMatrix& x : source_inputs) {
    if (x.rows() != code.block || x.cols() != 1)
      throw std::invalid_argument("source inputs must be N×1 vectors");
    if (!x.field()->same_as(*code.field)) throw std::invalid_argument("input field mismatch");
  }

  const auto src_of = source_index_by_node(net);
  std::vector<FieldMatrix> carried(net.edges().size(), FieldMatrix(code.field, code.block, 1));
  // Grouping edges by tail in topological node order guarantees all inputs of
  // a node are available when its outgoing edges are computed.
  for (std::size_t n : net.topo_order()) {
    for (std::size_t e : net.out_edges(n)) {
      if (net.is_source(n)) {
        carried[e] = mat_mul(code_alpha(code, e), source_inputs[src_of[n]]);
      } else {
        FieldMatrix acc(code.field, code.block, 1);
        for (std::size_t in : net.in_edges(n))
          acc = mat_add(acc, mat_mul(code_beta(code, in, e), carried[in]));
        carried[e] = std::move(acc);
      }
    }
  }
  return carried;
}

TransferVector transfer(const Network& net, const LinearCode& code) {
  validate_code(net, code);
  const std::size_t m = net.sources().size();
  const auto src_of = source_index_by_node(net);

  TransferVector tv{code.field, code.block, m, {}};
  const FieldMatrix zero(code.field, code.block, code.block);
  tv.per_edge.assign(net.edges().size(), std::vector<FieldMatrix>(m, zero));

  for (std::size_t n : net.topo_order()) {
    for (std::size_t e : net.out_edges(n)) {
      if (net.is_source(n)) {
        tv.per_edge[e][src_of[n]] = code_alpha(code, e);
      } else {
        for (std::size_t in : net.in_edges(n)) {
          const FieldMatrix& b = code_beta(code, in, e);
          for (std::size_t j = 0; j < m; ++j) {
            if (tv.per_edge[in][j].is_zero()) continue;
            tv.per_edge[e][j] = mat_add(tv.per_edge[e][j], mat_mul(b, tv.per_edge[in][j]));
          }
        }
      }
    }
  }
  return tv;
}

namespace {

// Per-terminal decoding condition as one linear system. With incoming edges
// e_1..e_d and per-source transfer matrices T_i = per_edge[e_i][j], the rows
// of the unknowns γ_1..γ_d satisfy, for each source j,
//   Σ_i row_r(γ_i) · T_i = row_r(identity),
// which transposes to A·u_r = rhs_r with A the stack of the T_iᵀ blocks and
// u_r the concatenated γ rows. A is shared across r, so one elimination
// solves all N right-hand sides.
struct TerminalSystem {
  FieldMatrix a;
  FieldMatrix rhs;  // N columns; column r is the stacked e_r blocks
};

TerminalSystem terminal_system(const TransferVector& tv, const std::vector<std::size_t>& in_edges) {
  const unsigned n = tv.block;
  const std::size_t m = tv.source_count;
  const std::size_t d = in_edges.size();
  FieldMatrix a(tv.field, m * n, d * n);
  FieldMatrix rhs(tv.field, m * n, n);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      const FieldMatrix& t = tv.per_edge[in_edges[i]][j];
      for (unsigned row = 0; row < n; ++row)
        for (unsigned col = 0; col < n; ++col)
          a.set(j * n + col, i * n + row, t.at(row, col));  // transposed block
    }
    for (unsigned r = 0; r < n; ++r) rhs.set(j * n + r, r, 1);
  }
  return {std::move(a), std::move(rhs)};
}

}  // namespace

DecoderSolveOutcome solve_decoders(const Network& net, const LinearCode& code) {
  if (net.sources().empty()) throw std::invalid_argument("network has no sources");
  const TransferVector tv = transfer(net, code);
  const unsigned n = code.block;

  DecoderSolveOutcome out;
  for (std::size_t t : net.terminals()) {
    const auto& in_edges = net.in_edges(t);
    if (in_edges.empty()) {
      out.failing_terminal = net.node(t).id;
      return out;
    }
    const TerminalSystem sys = terminal_system(tv, in_edges);
    const auto solution = solve_multi(sys.a, sys.rhs);
    if (!solution) {
      out.failing_terminal = net.node(t).id;
      return out;
    }
    auto& per_edge = out.decoders[net.node(t).id];
    for (std::size_t i = 0; i < in_edges.size(); ++i) {
      FieldMatrix gamma(code.field, n, n);
      // unknown (i*n + s) in solution column r is entry γ[r][s] of edge i
      for (unsigned s = 0; s < n; ++s)
        for (unsigned r = 0; r < n; ++r) gamma.set(r, s, solution->at(i * n + s, r));
      per_edge.emplace(in_edges[i], std::move(gamma));
    }
  }
  out.feasible = true;
  return out;
}

bool verify_sum_code(const Network& net, const LinearCode& code, const DecoderSpec& decoders,
                     std::size_t trials, std::uint64_t seed) {
  const TransferVector tv = transfer(net, code);
  const unsigned n = code.block;
  const std::size_t m = net.sources().size();
  const FieldMatrix eye = FieldMatrix::identity(code.field, n);

  for (std::size_t t : net.terminals()) {
    const auto dec_it = decoders.find(net.node(t).id);
    if (dec_it == decoders.end())
      throw std::invalid_argument("decoder missing for terminal " + net.node(t).id);
    const auto& per_edge = dec_it->second;
    for (std::size_t e : net.in_edges(t)) {
      if (!per_edge.count(e))
        throw std::invalid_argument("decoder for " + net.node(t).id + " misses edge " +
                                    std::to_string(e));
    }
    if (per_edge.size() != net.in_edges(t).size())
      throw std::invalid_argument("decoder for " + net.node(t).id + " has extraneous edges");

    for (std::size_t j = 0; j < m; ++j) {
      FieldMatrix net_coeff(code.field, n, n);
      for (std::size_t e : net.in_edges(t))
        net_coeff = mat_add(net_coeff, mat_mul(per_edge.at(e), tv.per_edge[e][j]));
      if (net_coeff != eye) return false;
    }
  }

  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<FieldMatrix> inputs;
    inputs.reserve(m);
    FieldMatrix expected(code.field, n, 1);
    for (std::size_t j = 0; j < m; ++j) {
      FieldMatrix x(code.field, n, 1);
      for (unsigned r = 0; r < n; ++r) x.set(r, 0, code.field->random_element(rng));
      expected = mat_add(expected, x);
      inputs.push_back(std::move(x));
    }
    const auto carried = propagate(net, code, inputs);
    for (std::size_t t : net.terminals()) {
      FieldMatrix decoded(code.field, n, 1);
      for (std::size_t e : net.in_edges(t))
        decoded = mat_add(decoded, mat_mul(decoders.at(net.node(t).id).at(e), carried[e]));
      if (decoded != expected) return false;
    }
  }
  return true;
}

namespace {

nlohmann::ordered_json matrix_to_json(const FieldMatrix& m) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::uint64_t v : m.values()) arr.push_back(v);
  return arr;
}

FieldMatrix matrix_from_json(const FieldPtr& field, unsigned block, const nlohmann::json& j) {
  if (!j.is_array() || j.size() != std::size_t(block) * block)
    throw ParseError("matrix entries must be a row-major list of N*N encodings");
  std::vector<std::uint64_t> values;
  values.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw ParseError("matrix entries must be unsigned integers");
    values.push_back(field->checked(v.get<std::uint64_t>()));
  }
  return FieldMatrix(field, block, block, std::move(values));
}

}  // namespace

std::string code_to_json(const Network& net, const LinearCode& code) {
  validate_code(net, code);
  nlohmann::ordered_json doc;
  doc["field"] = code.field->designation();
  doc["N"] = code.block;
  doc["alpha"] = nlohmann::ordered_json::array();
  for (const auto& [e, m] : code.alpha) doc["alpha"].push_back({e, matrix_to_json(m)});
  doc["beta"] = nlohmann::ordered_json::array();
  for (const auto& [pair, m] : code.beta)
    doc["beta"].push_back({pair.first, pair.second, matrix_to_json(m)});
  return doc.dump(2) + "\n";
}

LinearCode code_from_json(const Network& net, std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid code JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("field") || !doc.contains("N") ||
      !doc.contains("alpha") || !doc.contains("beta"))
    throw ParseError("code document requires field, N, alpha, beta");
  if (!doc["field"].is_string() || !doc["N"].is_number_unsigned())
    throw ParseError("code document field types are wrong");

  LinearCode code;
  code.field = Field::parse(doc["field"].get<std::string>());
  code.block = doc["N"].get<unsigned>();
  if (code.block < 1) throw ParseError("block length must be at least 1");

  const std::size_t edge_count = net.edges().size();
  for (const auto& entry : doc["alpha"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_unsigned())
      throw ParseError("alpha entries must be [edge, matrix]");
    const std::size_t e = entry[0].get<std::size_t>();
    if (e >= edge_count) throw ParseError("alpha edge index out of range");
    if (!code.alpha.emplace(e, matrix_from_json(code.field, code.block, entry[1])).second)
      throw ParseError("duplicate alpha entry for edge " + std::to_string(e));
  }
  for (const auto& entry : doc["beta"]) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_unsigned() ||
        !entry[1].is_number_unsigned())
      throw ParseError("beta entries must be [in, out, matrix]");
    const std::size_t in = entry[0].get<std::size_t>();
    const std::size_t out = entry[1].get<std::size_t>();
    if (in >= edge_count || out >= edge_count) throw ParseError("beta edge index out of range");
    if (!code.beta
             .emplace(std::make_pair(in, out), matrix_from_json(code.field, code.block, entry[2]))
             .second)
      throw ParseError("duplicate beta entry for edge pair (" + std::to_string(in) + "," +
                       std::to_string(out) + ")");
  }
  try {
    validate_code(net, code);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("code does not fit the network: ") + e.what());
  }
  return code;
}

std::string decoders_to_json(const Network& net, const DecoderSpec& decoders) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t t : net.terminals()) {
    const auto it = decoders.find(net.node(t).id);
    if (it == decoders.end()) continue;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [e, m] : it->second) entries.push_back({e, matrix_to_json(m)});
    arr.push_back({net.node(t).id, entries});
  }
  return arr.dump(2) + "\n";
}

}  // namespace sumnet
