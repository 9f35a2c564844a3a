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

#ifndef SUMNET_NETWORK_HPP
#define SUMNET_NETWORK_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sumnet {

enum class NodeRole { Source, Relay, Terminal };

std::string_view role_name(NodeRole role);
NodeRole role_from_name(std::string_view name);  // throws ParseError

struct Node {
  std::string id;
  NodeRole role;
};

struct Edge {
  std::size_t tail;  // node index
  std::size_t head;
};

/// Directed acyclic unit-capacity network with declared source/terminal roles.
///
/// Construction validates: unique node ids, edge endpoints exist, no
/// self-loops, at most one edge per (tail, head) pair, sources have no
/// incoming edges, terminals have no outgoing edges, and the graph is
/// acyclic. Edge order is preserved; it indexes coding coefficients in code
/// files. Immutable after construction.
class Network {
 public:
  Network(std::string name, std::vector<Node> nodes,
          const std::vector<std::pair<std::string, std::string>>& edges_by_id);

  const std::string& name() const { return name_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t node_index(std::string_view id) const;  // throws if absent
  const Node& node(std::size_t i) const { return nodes_[i]; }

  const std::vector<std::size_t>& sources() const { return sources_; }
  const std::vector<std::size_t>& terminals() const { return terminals_; }

  /// Edge indices entering / leaving a node, ascending.
  const std::vector<std::size_t>& in_edges(std::size_t node) const { return in_edges_[node]; }
  const std::vector<std::size_t>& out_edges(std::size_t node) const { return out_edges_[node]; }

  /// Node indices in topological order, ties broken by smallest id.
  const std::vector<std::size_t>& topo_order() const { return topo_; }
  std::vector<std::string> topo_order_ids() const;

  bool is_source(std::size_t node) const { return nodes_[node].role == NodeRole::Source; }
  bool is_terminal(std::size_t node) const { return nodes_[node].role == NodeRole::Terminal; }

 private:
  std::string name_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> sources_, terminals_;
  std::vector<std::vector<std::size_t>> in_edges_, out_edges_;
  std::vector<std::size_t> topo_;
};

bool operator==(const Network& a, const Network& b);
inline bool operator!=(const Network& a, const Network& b) { return !(a == b); }

/// The four-layer network with m sources s1..sm, relay chains u_i -> v_i for
/// i < m, and m terminals. Edge groups, in order: the (s_i,u_i),(u_i,v_i),
/// (v_i,t_i) chains; the direct (s_i,t_j) edges for i != j < m; the broadcast
/// (s_m,u_i) edges; the (v_i,t_m) edges.
Network build_s_network(std::uint64_t m);

/// Complete bipartite network: m sources, n terminals, every edge directed
/// source to terminal.
Network build_complete_bipartite(std::uint64_t m, std::uint64_t n);

/// Disjoint union of a and b (node ids prefixed "L." and "R.") plus every
/// edge from a's sources to b's terminals and from b's sources to a's
/// terminals. Sources and terminals of the result are those of both inputs.
Network crisscross(const Network& a, const Network& b);

/// True iff every terminal is reachable from every source.
bool all_pairs_connected(const Network& net);

std::string serialize(const Network& net);          // deterministic JSON document
Network deserialize(std::string_view json_text);    // throws ParseError
std::string export_dot(const Network& net);         // layered Graphviz rendering

}  // namespace sumnet

#endif  // SUMNET_NETWORK_HPP
