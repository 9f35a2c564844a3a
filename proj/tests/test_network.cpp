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

#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"

#include "errors.hpp"
#include "netspec.hpp"
#include "network.hpp"

using namespace sumnet;

namespace {

std::set<std::pair<std::string, std::string>> edge_id_set(const Network& net) {
  std::set<std::pair<std::string, std::string>> out;
  for (const Edge& e : net.edges()) out.emplace(net.node(e.tail).id, net.node(e.head).id);
  return out;
}

// The four edge groups, assembled independently of the builder.
std::set<std::pair<std::string, std::string>> expected_s_edges(std::uint64_t m) {
  const auto id = [](const char* prefix, std::uint64_t i) {
    return std::string(prefix) + std::to_string(i);
  };
  std::set<std::pair<std::string, std::string>> expected;
  for (std::uint64_t i = 1; i < m; ++i) {
    expected.emplace(id("s", i), id("u", i));
    expected.emplace(id("u", i), id("v", i));
    expected.emplace(id("v", i), id("t", i));
  }
  for (std::uint64_t i = 1; i < m; ++i)
    for (std::uint64_t j = 1; j < m; ++j)
      if (i != j) expected.emplace(id("s", i), id("t", j));
  for (std::uint64_t i = 1; i < m; ++i) expected.emplace(id("s", m), id("u", i));
  for (std::uint64_t i = 1; i < m; ++i) expected.emplace(id("v", i), id("t", m));
  return expected;
}

}  // namespace

TEST_SUITE("network") {

TEST_CASE("relay-chain family sizes and edge sets") {
  CHECK(build_s_network(3).nodes().size() == 10);
  CHECK(build_s_network(3).edges().size() == 12);
  CHECK(build_s_network(4).nodes().size() == 14);
  CHECK(build_s_network(4).edges().size() == 21);

  for (std::uint64_t m = 2; m <= 64; ++m) {
    const Network net = build_s_network(m);
    CAPTURE(m);
    REQUIRE(net.nodes().size() == 4 * m - 2);
    REQUIRE(net.edges().size() == (m - 1) * (m + 3));
    REQUIRE(edge_id_set(net) == expected_s_edges(m));
    REQUIRE(net.sources().size() == m);
    REQUIRE(net.terminals().size() == m);
  }
  CHECK_THROWS_AS(build_s_network(1), std::invalid_argument);
}

TEST_CASE("the smallest family member has no direct source-terminal edges") {
  const Network net = build_s_network(2);
  CHECK(net.nodes().size() == 6);
  CHECK(net.edges().size() == 5);
  for (const Edge& e : net.edges()) {
    const bool cross = net.node(e.tail).id[0] == 's' && net.node(e.head).id[0] == 't';
    CHECK_FALSE(cross);
  }
}

TEST_CASE("complete bipartite construction") {
  const Network k23 = build_complete_bipartite(2, 3);
  CHECK(k23.nodes().size() == 5);
  CHECK(k23.edges().size() == 6);
  CHECK(build_complete_bipartite(1, 1).edges().size() == 1);

  const Network k33 = build_complete_bipartite(3, 3);
  CHECK(k33.edges().size() == 9);
  for (std::size_t s : k33.sources())
    for (std::size_t t : k33.terminals())
      CHECK(edge_id_set(k33).count({k33.node(s).id, k33.node(t).id}) == 1);

  CHECK_THROWS_AS(build_complete_bipartite(0, 2), std::invalid_argument);
}

TEST_CASE("crisscross composition") {
  const Network k11 = build_complete_bipartite(1, 1);
  const Network small = crisscross(k11, k11);
  CHECK(small.nodes().size() == 4);
  CHECK(small.edges().size() == 4);

  const Network fig = crisscross(build_s_network(4), build_complete_bipartite(2, 3));
  CHECK(fig.nodes().size() == 19);
  CHECK(fig.edges().size() == 21 + 6 + 4 * 3 + 2 * 4);
  CHECK(fig.sources().size() == 6);
  CHECK(fig.terminals().size() == 7);
  CHECK(fig.name() == "X(S(4),K(2,3))");

  SUBCASE("edge count formula and connectivity, across a small family") {
    std::vector<Network> pool;
    for (std::uint64_t m = 2; m <= 4; ++m) pool.push_back(build_s_network(m));
    for (std::uint64_t m = 1; m <= 3; ++m) pool.push_back(build_complete_bipartite(m, 4 - m));
    for (const Network& a : pool) {
      for (const Network& b : pool) {
        const Network x = crisscross(a, b);
        CHECK(x.edges().size() == a.edges().size() + b.edges().size() +
                                      a.sources().size() * b.terminals().size() +
                                      b.sources().size() * a.terminals().size());
        CHECK(x.sources().size() == a.sources().size() + b.sources().size());
        CHECK(x.terminals().size() == a.terminals().size() + b.terminals().size());
        CHECK(all_pairs_connected(x));
      }
    }
  }
}

TEST_CASE("source-terminal connectivity") {
  for (std::uint64_t m = 2; m <= 32; ++m) CHECK(all_pairs_connected(build_s_network(m)));
  CHECK(all_pairs_connected(build_complete_bipartite(2, 3)));

  const char* disjoint = R"({
    "name": "two islands",
    "nodes": [
      {"id": "a", "role": "source"}, {"id": "b", "role": "terminal"},
      {"id": "c", "role": "source"}, {"id": "d", "role": "terminal"}
    ],
    "edges": [["a", "b"], ["c", "d"]]
  })";
  CHECK_FALSE(all_pairs_connected(deserialize(disjoint)));
}

TEST_CASE("topological order respects the layer structure") {
  const Network net = build_s_network(3);
  const auto ids = net.topo_order_ids();
  const auto position = [&](const std::string& id) {
    return std::find(ids.begin(), ids.end(), id) - ids.begin();
  };
  for (const char* s : {"s1", "s2", "s3"})
    for (const char* u : {"u1", "u2"}) CHECK(position(s) < position(u));
  for (const char* u : {"u1", "u2"})
    for (const char* v : {"v1", "v2"}) CHECK(position(u) < position(v));
  for (const char* v : {"v1", "v2"})
    for (const char* t : {"t1", "t2", "t3"}) CHECK(position(v) < position(t));

  CHECK(build_s_network(3).topo_order_ids() == ids);
}

TEST_CASE("serialization round-trips") {
  for (const char* expr : {"S(3)", "K(2,3)", "X(S(4),K(2,3))", "X(X(S(3),S(4)),K(1,2))"}) {
    const Network net = realize(NetSpec::parse(expr));
    const std::string text = serialize(net);
    const Network back = deserialize(text);
    CAPTURE(expr);
    CHECK(back == net);
    CHECK(serialize(back) == text);  // byte-exact re-serialization
  }
}

TEST_CASE("deserialization rejects malformed documents") {
  const auto reject = [](const char* text) {
    CAPTURE(text);
    CHECK_THROWS_AS(deserialize(text), ParseError);
  };
  reject("not json");
  reject(R"({"name": "x"})");
  reject(R"({"name": "x", "nodes": [], "edges": [["a","b"]]})");        // unknown endpoint
  reject(R"({"name": "x", "nodes": [{"id":"a","role":"relay"}], "edges": [["a","a"]]})");
  reject(R"({"name": "x", "nodes": [{"id":"a","role":"king"}], "edges": []})");
  reject(R"({"name": "x", "nodes": [{"id":"a","role":"relay"},{"id":"a","role":"relay"}], "edges": []})");
  reject(R"({"name": "x", "nodes": [{"id":"a","role":"relay"},{"id":"b","role":"relay"}],
             "edges": [["a","b"],["a","b"]]})");                        // duplicate edge
  reject(R"({"name": "x", "nodes": [{"id":"a","role":"relay"},{"id":"b","role":"relay"}],
             "edges": [["a","b"],["b","a"]]})");                        // cycle
  reject(R"({"name": "x", "nodes": [{"id":"a","role":"relay"},{"id":"b","role":"source"}],
             "edges": [["a","b"]]})");                                  // source with input
  reject(R"({"name": "x", "nodes": [{"id":"a","role":"terminal"},{"id":"b","role":"relay"}],
             "edges": [["a","b"]]})");                                  // terminal with output
}

TEST_CASE("graphviz export") {
  const std::string tiny = export_dot(build_complete_bipartite(1, 1));
  std::size_t arrows = 0, pos = 0;
  while ((pos = tiny.find("->", pos)) != std::string::npos) {
    ++arrows;
    pos += 2;
  }
  CHECK(arrows == 1);

  const std::string layered = export_dot(build_s_network(3));
  CHECK(layered.find("digraph \"S(3)\"") == 0);
  CHECK(layered.find("rank=same") != std::string::npos);
  CHECK(layered == export_dot(build_s_network(3)));
}

TEST_CASE("expression parsing") {
  CHECK(NetSpec::parse("S(2)").to_string() == "S(2)");  // smallest family member
  CHECK(NetSpec::parse("S(3)").to_string() == "S(3)");
  CHECK(NetSpec::parse(" K( 2 , 3 ) ").to_string() == "K(2,3)");
  CHECK(NetSpec::parse("X(S(4),K(2,3))").to_string() == "X(S(4),K(2,3))");
  CHECK(NetSpec::parse("x(s(3),k(1,2))").to_string() == "X(S(3),K(1,2))");
  CHECK(NetSpec::parse("X(X(S(3),S(4)),K(1,2))").to_string() == "X(X(S(3),S(4)),K(1,2))");

  for (const char* bad : {"S()", "S(1)", "S(2", "Q(3)", "S(3)x", "K(0,2)", "K(2)", "X(S(3))",
                          "S(99999)", "", "S(-3)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(NetSpec::parse(bad), ParseError);
  }
}

TEST_CASE("realization matches the direct builders") {
  CHECK(realize(NetSpec::parse("S(3)")) == build_s_network(3));
  CHECK(realize(NetSpec::parse("K(2,3)")) == build_complete_bipartite(2, 3));

  const Network both = realize(NetSpec::parse("X(S(4),S(5))"));
  CHECK(both.sources().size() == 9);
  CHECK(both.terminals().size() == 9);

  const Network fig = realize(NetSpec::parse("X(S(4),K(2,3))"));
  CHECK(fig == crisscross(build_s_network(4), build_complete_bipartite(2, 3)));
}

}  // TEST_SUITE
