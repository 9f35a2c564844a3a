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

#include "network.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "errors.hpp"

namespace sumnet {

std::string_view role_name(NodeRole role) {
  switch (role) {
    case NodeRole::Source: return "source";
    case NodeRole::Relay: return "relay";
    case NodeRole::Terminal: return "terminal";
  }
  throw std::logic_error("unknown role");
}

NodeRole role_from_name(std::string_view name) {
  if (name == "source") return NodeRole::Source;
  if (name == "relay") return NodeRole::Relay;
  if (name == "terminal") return NodeRole::Terminal;
  throw ParseError("unknown node role '" + std::string(name) + "'");
}

Network::Network(std::string name, std::vector<Node> nodes,
                 const std::vector<std::pair<std::string, std::string>>& edges_by_id)
    : name_(std::move(name)), nodes_(std::move(nodes)) {
  std::map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!index.emplace(nodes_[i].id, i).second)
      throw std::invalid_argument("duplicate node id '" + nodes_[i].id + "'");
  }

  in_edges_.resize(nodes_.size());
  out_edges_.resize(nodes_.size());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  edges_.reserve(edges_by_id.size());
  for (const auto& [tail_id, head_id] : edges_by_id) {
    const auto t = index.find(tail_id);
    const auto h = index.find(head_id);
    if (t == index.end()) throw std::invalid_argument("edge tail '" + tail_id + "' is not a node");
    if (h == index.end()) throw std::invalid_argument("edge head '" + head_id + "' is not a node");
    if (t->second == h->second) throw std::invalid_argument("self-loop at '" + tail_id + "'");
    if (!seen.emplace(t->second, h->second).second)
      throw std::invalid_argument("duplicate edge " + tail_id + " -> " + head_id);
    const std::size_t e = edges_.size();
    edges_.push_back({t->second, h->second});
    out_edges_[t->second].push_back(e);
    in_edges_[h->second].push_back(e);
  }

  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].role == NodeRole::Source) {
      sources_.push_back(i);
      if (!in_edges_[i].empty())
        throw std::invalid_argument("source '" + nodes_[i].id + "' has incoming edges");
    } else if (nodes_[i].role == NodeRole::Terminal) {
      terminals_.push_back(i);
      if (!out_edges_[i].empty())
        throw std::invalid_argument("terminal '" + nodes_[i].id + "' has outgoing edges");
    }
  }

  // Kahn's algorithm proves acyclicity and yields longest-path layers; the
  // published order sorts by (layer, id), which keeps whole layers together
  // and is reproducible regardless of input order.
  std::vector<std::size_t> indegree(nodes_.size());
  std::vector<std::size_t> layer(nodes_.size(), 0);
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    indegree[i] = in_edges_[i].size();
    if (indegree[i] == 0) queue.push_back(i);
  }
  std::size_t processed = 0;
  while (processed < queue.size()) {
    const std::size_t n = queue[processed++];
    for (std::size_t e : out_edges_[n]) {
      const std::size_t head = edges_[e].head;
      layer[head] = std::max(layer[head], layer[n] + 1);
      if (--indegree[head] == 0) queue.push_back(head);
    }
  }
  if (processed != nodes_.size()) throw std::invalid_argument("network contains a cycle");
  topo_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) topo_[i] = i;
  std::sort(topo_.begin(), topo_.end(), [&](std::size_t a, std::size_t b) {
    if (layer[a] != layer[b]) return layer[a] < layer[b];
    return nodes_[a].id < nodes_[b].id;
  });
}

std::size_t Network::node_index(std::string_view id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].id == id) return i;
  throw std::invalid_argument("no node '" + std::string(id) + "'");
}

std::vector<std::string> Network::topo_order_ids() const {
  std::vector<std::string> ids;
  ids.reserve(topo_.size());
  for (std::size_t n : topo_) ids.push_back(nodes_[n].id);
  return ids;
}

bool operator==(const Network& a, const Network& b) {
  if (a.name() != b.name() || a.nodes().size() != b.nodes().size() ||
      a.edges().size() != b.edges().size())
    return false;
  for (std::size_t i = 0; i < a.nodes().size(); ++i) {
    if (a.nodes()[i].id != b.nodes()[i].id || a.nodes()[i].role != b.nodes()[i].role) return false;
  }
  for (std::size_t i = 0; i < a.edges().size(); ++i) {
    if (a.edges()[i].tail != b.edges()[i].tail || a.edges()[i].head != b.edges()[i].head)
      return false;
  }
  return true;
}

Network build_s_network(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("S network requires m >= 2");
  std::vector<Node> nodes;
  nodes.reserve(4 * m - 2);
  for (std::uint64_t i = 1; i <= m; ++i) nodes.push_back({"s" + std::to_string(i), NodeRole::Source});
  for (std::uint64_t i = 1; i < m; ++i) nodes.push_back({"u" + std::to_string(i), NodeRole::Relay});
  for (std::uint64_t i = 1; i < m; ++i) nodes.push_back({"v" + std::to_string(i), NodeRole::Relay});
  for (std::uint64_t i = 1; i <= m; ++i) nodes.push_back({"t" + std::to_string(i), NodeRole::Terminal});

  std::vector<std::pair<std::string, std::string>> edges;
  const auto s = [](std::uint64_t i) { return "s" + std::to_string(i); };
  const auto u = [](std::uint64_t i) { return "u" + std::to_string(i); };
  const auto v = [](std::uint64_t i) { return "v" + std::to_string(i); };
  const auto t = [](std::uint64_t i) { return "t" + std::to_string(i); };
  for (std::uint64_t i = 1; i < m; ++i) {
    edges.emplace_back(s(i), u(i));
    edges.emplace_back(u(i), v(i));
    edges.emplace_back(v(i), t(i));
  }
  for (std::uint64_t i = 1; i < m; ++i)
    for (std::uint64_t j = 1; j < m; ++j)
      if (i != j) edges.emplace_back(s(i), t(j));
  for (std::uint64_t i = 1; i < m; ++i) edges.emplace_back(s(m), u(i));
  for (std::uint64_t i = 1; i < m; ++i) edges.emplace_back(v(i), t(m));

  return Network("S(" + std::to_string(m) + ")", std::move(nodes), edges);
}

Network build_complete_bipartite(std::uint64_t m, std::uint64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("bipartite network requires m, n >= 1");
  std::vector<Node> nodes;
  for (std::uint64_t i = 1; i <= m; ++i) nodes.push_back({"s" + std::to_string(i), NodeRole::Source});
  for (std::uint64_t j = 1; j <= n; ++j) nodes.push_back({"t" + std::to_string(j), NodeRole::Terminal});
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::uint64_t i = 1; i <= m; ++i)
    for (std::uint64_t j = 1; j <= n; ++j)
      edges.emplace_back("s" + std::to_string(i), "t" + std::to_string(j));
  return Network("K(" + std::to_string(m) + "," + std::to_string(n) + ")", std::move(nodes), edges);
}

Network crisscross(const Network& a, const Network& b) {
  std::vector<Node> nodes;
  nodes.reserve(a.nodes().size() + b.nodes().size());
  for (const Node& n : a.nodes()) nodes.push_back({"L." + n.id, n.role});
  for (const Node& n : b.nodes()) nodes.push_back({"R." + n.id, n.role});

  std::vector<std::pair<std::string, std::string>> edges;
  for (const Edge& e : a.edges())
    edges.emplace_back("L." + a.node(e.tail).id, "L." + a.node(e.head).id);
  for (const Edge& e : b.edges())
    edges.emplace_back("R." + b.node(e.tail).id, "R." + b.node(e.head).id);
  for (std::size_t s : a.sources())
    for (std::size_t t : b.terminals())
      edges.emplace_back("L." + a.node(s).id, "R." + b.node(t).id);
  for (std::size_t s : b.sources())
    for (std::size_t t : a.terminals())
      edges.emplace_back("R." + b.node(s).id, "L." + a.node(t).id);

  return Network("X(" + a.name() + "," + b.name() + ")", std::move(nodes), edges);
}

bool all_pairs_connected(const Network& net) {
  for (std::size_t s : net.sources()) {
    std::vector<bool> reached(net.nodes().size(), false);
    std::vector<std::size_t> stack{s};
    reached[s] = true;
    while (!stack.empty()) {
      const std::size_t n = stack.back();
      stack.pop_back();
      for (std::size_t e : net.out_edges(n)) {
        const std::size_t h = net.edges()[e].head;
        if (!reached[h]) {
          reached[h] = true;
          stack.push_back(h);
        }
      }
    }
    for (std::size_t t : net.terminals())
      if (!reached[t]) return false;
  }
  return true;
}

std::string serialize(const Network& net) {
  nlohmann::ordered_json doc;
  doc["name"] = net.name();
  doc["nodes"] = nlohmann::ordered_json::array();
  for (const Node& n : net.nodes()) {
    doc["nodes"].push_back({{"id", n.id}, {"role", std::string(role_name(n.role))}});
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : net.edges()) {
    doc["edges"].push_back({net.node(e.tail).id, net.node(e.head).id});
  }
  return doc.dump(2) + "\n";
}

Network deserialize(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid network JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("name") || !doc.contains("nodes") || !doc.contains("edges"))
    throw ParseError("network document requires name, nodes, edges");
  if (!doc["name"].is_string() || !doc["nodes"].is_array() || !doc["edges"].is_array())
    throw ParseError("network document field types are wrong");

  std::vector<Node> nodes;
  for (const auto& n : doc["nodes"]) {
    if (!n.is_object() || !n.contains("id") || !n.contains("role") || !n["id"].is_string() ||
        !n["role"].is_string())
      throw ParseError("node entries require string id and role");
    nodes.push_back({n["id"].get<std::string>(), role_from_name(n["role"].get<std::string>())});
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw ParseError("edge entries must be [tail, head] id pairs");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  try {
    return Network(doc["name"].get<std::string>(), std::move(nodes), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid network: ") + e.what());
  }
}

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_dot(const Network& net) {
  // Longest-path layering gives the rank groups.
  std::vector<std::size_t> layer(net.nodes().size(), 0);
  std::size_t max_layer = 0;
  for (std::size_t n : net.topo_order()) {
    for (std::size_t e : net.in_edges(n))
      layer[n] = std::max(layer[n], layer[net.edges()[e].tail] + 1);
    max_layer = std::max(max_layer, layer[n]);
  }

  std::string out = "digraph " + dot_quote(net.name()) + " {\n  rankdir=LR;\n";
  for (std::size_t l = 0; l <= max_layer; ++l) {
    std::string group;
    for (std::size_t i = 0; i < net.nodes().size(); ++i)
      if (layer[i] == l) group += " " + dot_quote(net.node(i).id) + ";";
    if (!group.empty()) out += "  { rank=same;" + group + " }\n";
  }
  for (const Node& n : net.nodes()) {
    const char* shape = n.role == NodeRole::Source     ? "box"
                        : n.role == NodeRole::Terminal ? "doublecircle"
                                                       : "circle";
    out += "  " + dot_quote(n.id) + " [shape=" + shape + "];\n";
  }
  for (const Edge& e : net.edges())
    out += "  " + dot_quote(net.node(e.tail).id) + " -> " + dot_quote(net.node(e.head).id) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace sumnet
