#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "randic/canon.hpp"
#include "randic/graph.hpp"

using namespace randic;

TEST_SUITE("graph") {

TEST_CASE("degree profiles") {
  CHECK(degree_profile(oracle::cycle(5)).counts == std::map<int, int>{{2, 5}});
  CHECK(degree_profile(oracle::complete(4)).counts == std::map<int, int>{{3, 4}});
  const auto star = degree_profile(oracle::star(3));
  CHECK(star.counts == std::map<int, int>{{1, 3}, {3, 1}});
  CHECK(star.max_degree == 3);
  CHECK(star.count(2) == 0);
}

TEST_CASE("edge-type signatures") {
  const auto p4 = edge_type_signature(oracle::path(4));
  CHECK(p4.count(1, 2) == 2);
  CHECK(p4.count(2, 1) == 2);
  CHECK(p4.count(2, 2) == 1);
  CHECK(p4.total() == 3);
  CHECK(edge_type_signature(oracle::complete(4)).counts == std::map<DegreePair, long>{{{3, 3}, 6}});

  auto diff = edge_type_signature(oracle::cycle(6)) - edge_type_signature(oracle::path(6));
  CHECK(diff.count(2, 2) == 3);
  CHECK(diff.count(1, 2) == -2);
}

TEST_CASE("connectivity and cyclomatic number") {
  Graph tree(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {5, 6}});
  CHECK(cyclomatic_number(tree) == 0);
  CHECK(cyclomatic_number(oracle::cycle(5)) == 1);
  CHECK(cyclomatic_number(oracle::complete(4)) == 3);
  CHECK(is_connected(oracle::cycle(5)));
  CHECK(is_connected(Graph(1)));
  Graph triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(is_connected(triangles));
  CHECK_THROWS_AS(cyclomatic_number(triangles), std::invalid_argument);
  CHECK(component_of(triangles, 4) == (bit(3) | bit(4) | bit(5)));
}

TEST_CASE("edge editing rejects bad input") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS(g.add_edge(0, 1));
  CHECK_THROWS(g.add_edge(1, 0));
  CHECK_THROWS(g.add_edge(2, 2));
  CHECK_THROWS(g.add_edge(0, 3));
  g.remove_edge(1, 0);
  CHECK(g.size() == 0);
  CHECK(g.add_vertex() == 3);
  CHECK(g.order() == 4);
}

TEST_CASE("graph6 examples") {
  const Graph g = parse_graph6("D?{");
  CHECK(g.order() == 5);
  CHECK(g == oracle::graph_of(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  CHECK(write_graph6(g) == "D?{");
  CHECK(write_graph6(Graph(1)) == "@");
  CHECK(parse_graph6("@").order() == 1);
  CHECK(write_graph6(Graph(0)) == "?");
  CHECK(parse_graph6(write_graph6(oracle::complete(4))) == oracle::complete(4));
  CHECK(parse_graph6(">>graph6<<D?{") == g);
}

TEST_CASE("graph6 round trip on random graphs up to 64 vertices") {
  std::mt19937_64 rng(7);
  for (int n : {2, 7, 12, 30, 62, 63, 64}) {
    Graph g(n);
    std::bernoulli_distribution coin(0.3);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) g.add_edge(u, v);
      }
    }
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("graph6 errors carry the byte offset") {
  try {
    parse_graph6("D?");
    FAIL("expected an error");
  } catch (const Graph6Error& e) {
    CHECK(e.offset() == 2);
  }
  try {
    parse_graph6("D?\x7f");
    FAIL("expected an error");
  } catch (const Graph6Error& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("D?{?"), Graph6Error);
}

TEST_CASE("canonical codes separate and identify") {
  Graph c4 = oracle::cycle(4);
  std::vector<int> perm{2, 0, 3, 1};
  CHECK(canonical_code(c4) == canonical_code(c4.relabeled(perm)));
  CHECK(canonical_code(c4) != canonical_code(oracle::path(4)));
  Graph k4e1(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
  Graph k4e2(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(canonical_code(k4e1) == canonical_code(k4e2));
}

TEST_CASE("canonical codes agree with the permutation oracle on 6 vertices") {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution coin(0.5);
  std::map<std::uint64_t, CanonicalCode> by_oracle;
  std::map<CanonicalCode, std::uint64_t> by_code;
  for (int trial = 0; trial < 600; ++trial) {
    Graph g(6);
    for (int u = 0; u < 6; ++u) {
      for (int v = u + 1; v < 6; ++v) {
        if (coin(rng)) g.add_edge(u, v);
      }
    }
    const auto brute = oracle::brute_canonical(g);
    const auto code = canonical_code(g);
    auto [a, fresh_a] = by_oracle.emplace(brute, code);
    auto [b, fresh_b] = by_code.emplace(code, brute);
    CHECK(a->second == code);
    CHECK(b->second == brute);
  }
}

TEST_CASE("canonical codes are invariant under random relabeling") {
  std::mt19937_64 rng(3);
  const Graph samples[] = {oracle::petersen(), oracle::complete(7), oracle::cycle(12),
                           parse_graph6("JbGGGlA_LO?"), parse_graph6("Ib?GW]Mg?")};
  for (const Graph& g : samples) {
    const auto code = canonical_code(g);
    const Graph form = canonical_form(g);
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 40; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const Graph h = g.relabeled(perm);
      CHECK(canonical_code(h) == code);
      CHECK(canonical_form(h) == form);
    }
  }
}

TEST_CASE("automorphism generators are automorphisms") {
  const Graph samples[] = {oracle::petersen(), oracle::cycle(8), oracle::star(5)};
  for (const Graph& g : samples) {
    const auto lab = canonical_labeling(g);
    for (const auto& gen : lab.generators) CHECK(g.relabeled(gen) == g);
  }
  const auto orbits = vertex_orbits(10, canonical_labeling(oracle::petersen()).generators);
  CHECK(std::all_of(orbits.begin(), orbits.end(), [](int r) { return r == 0; }));
  const auto star_orbits = vertex_orbits(6, canonical_labeling(oracle::star(5)).generators);
  CHECK(star_orbits == std::vector<int>{0, 1, 1, 1, 1, 1});
}

}  // TEST_SUITE
