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

#ifndef SUMNET_CODING_HPP
#define SUMNET_CODING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "network.hpp"

namespace sumnet {

/// A linear code over a network: block length N (1 = scalar coding), one N×N
/// source coefficient per source-outgoing edge, and one N×N local coefficient
/// per (incoming edge, outgoing edge) adjacency at every non-source node.
/// Each relay output edge mixes the relay's inputs with its own coefficients.
struct LinearCode {
  FieldPtr field;
  unsigned block = 1;
  std::map<std::size_t, FieldMatrix> alpha;                          // out edge -> N×N
  std::map<std::pair<std::size_t, std::size_t>, FieldMatrix> beta;   // (in edge, out edge) -> N×N
};

/// Per-terminal decoding coefficients: terminal id -> incoming edge -> N×N.
using DecoderSpec = std::map<std::string, std::map<std::size_t, FieldMatrix>>;

/// Net coefficient of every source message on every edge: per_edge[e][j] is
/// the N×N matrix T such that edge e carries Σ_j T·X_j.
struct TransferVector {
  FieldPtr field;
  unsigned block = 1;
  std::size_t source_count = 0;
  std::vector<std::vector<FieldMatrix>> per_edge;
};

/// Throws std::invalid_argument unless the code has exactly the coefficient
/// keys the network induces, with N×N matrices over a single field.
void validate_code(const Network& net, const LinearCode& code);

/// Every coefficient the N×N identity.
LinearCode identity_code(const Network& net, FieldPtr field, unsigned block);

/// Uniformly random coefficients (zero included).
LinearCode random_code(const Network& net, FieldPtr field, unsigned block, std::mt19937_64& rng);

/// γ = identity on every terminal incoming edge.
DecoderSpec all_ones_decoder(const Network& net, FieldPtr field, unsigned block);

/// Evaluates the code on concrete source messages. `source_inputs[i]` is the
/// N×1 message of the i-th source in node order; returns the N×1 symbol
/// carried by each edge, indexed like the network's edge list.
std::vector<FieldMatrix> propagate(const Network& net, const LinearCode& code,
                                   const std::vector<FieldMatrix>& source_inputs);

/// Symbolic propagation of the coefficients themselves: for every edge, the
/// per-source net coefficient (the sum over all tail-to-edge paths of the
/// ordered coefficient products).
TransferVector transfer(const Network& net, const LinearCode& code);

struct DecoderSolveOutcome {
  bool feasible = false;
  DecoderSpec decoders;           // populated when feasible
  std::string failing_terminal;   // first terminal (node order) with no solution
};

/// Solves, independently per terminal, for decoding coefficients that turn
/// the received symbols into the sum of all source messages. The solution is
/// the deterministic one of the elimination (free variables zero).
DecoderSolveOutcome solve_decoders(const Network& net, const LinearCode& code);

/// True iff the decoders reproduce the all-sources sum both symbolically
/// (per-source net coefficient is the identity at every terminal) and on
/// `trials` seeded random inputs.
bool verify_sum_code(const Network& net, const LinearCode& code, const DecoderSpec& decoders,
                     std::size_t trials, std::uint64_t seed);

// Code documents: {"field": "p^k", "N": n, "alpha": [[edge, matrix]...],
// "beta": [[in, out, matrix]...]}, matrices row-major canonical encodings.
std::string code_to_json(const Network& net, const LinearCode& code);
LinearCode code_from_json(const Network& net, std::string_view json_text);

std::string decoders_to_json(const Network& net, const DecoderSpec& decoders);

}  // namespace sumnet

#endif  // SUMNET_CODING_HPP
