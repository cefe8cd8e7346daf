#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "curvechain/errors.hpp"
#include "curvechain/graph.hpp"

using namespace curvechain;

namespace {

FiniteGraph random_graph(std::mt19937& rng, int n, double density) {
  FiniteGraph g(n);
  std::bernoulli_distribution flip(density);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) g.add_edge(u, v);
  return g;
}

// exhaustive oracle over all injections, hosts kept small
bool brute_force_induced(const FiniteGraph& pattern, const FiniteGraph& host) {
  const int k = pattern.vertex_count(), n = host.vertex_count();
  if (k > n) return false;
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  std::sort(pick.begin(), pick.end());
  std::vector<int> map(k);
  // iterate over ordered k-tuples of distinct host vertices
  std::vector<int> idx(k, 0);
  std::vector<bool> used(n, false);
  // simple recursive lambda
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == k) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int u = 0; u < depth && ok; ++u)
        ok = pattern.adjacent(u, depth) == host.adjacent(map[u], v);
      if (!ok) continue;
      used[v] = true;
      map[depth] = v;
      if (self(self, depth + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

TEST_CASE("construction and basics") {
  FiniteGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(g.add_edge(1, 1), BadParameter);
  CHECK_THROWS_AS(g.add_edge(0, 4), BadParameter);
  CHECK_THROWS_AS(family(GraphFamily::Cycle, 2), BadParameter);
}

TEST_CASE("families") {
  auto p4 = family(GraphFamily::Path, 4);
  CHECK(p4.edge_count() == 3);
  auto c5 = family(GraphFamily::Cycle, 5);
  CHECK(c5.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
  auto k6 = family(GraphFamily::Complete, 6);
  CHECK(k6.edge_count() == 15);
  // the complement of a 5-cycle is again a 5-cycle
  FullSubgraphResult r = is_full_subgraph(family(GraphFamily::Cycle, 5), complement(c5));
  CHECK(r.witness.has_value());
}

TEST_CASE("complement and join identities, randomized") {
  std::mt19937 rng(7241);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + int(rng() % 12);
    auto g = random_graph(rng, n, 0.4);
    CHECK(complement(complement(g)) == g);
    int m = 1 + int(rng() % 6);
    auto h = random_graph(rng, m, 0.6);
    auto j = join(g, h);
    CHECK(j.vertex_count() == n + m);
    CHECK(j.edge_count() == g.edge_count() + h.edge_count() + n * m);
    auto u = disjoint_union(g, h);
    CHECK(u.edge_count() == g.edge_count() + h.edge_count());
    // join is the complement of the disjoint union of complements
    CHECK(j == complement(disjoint_union(complement(g), complement(h))));
  }
}

TEST_CASE("raag center support") {
  auto k4 = family(GraphFamily::Complete, 4);
  CHECK(raag_center_support(k4) == std::vector<int>{0, 1, 2, 3});
  auto c5 = family(GraphFamily::Cycle, 5);
  CHECK(raag_center_support(c5).empty());
  auto coned = join(family(GraphFamily::Complete, 1), c5);
  CHECK(raag_center_support(coned) == std::vector<int>{0});
  FiniteGraph single(1);
  CHECK(raag_center_support(single) == std::vector<int>{0});
}

TEST_CASE("induced subgraph search against brute force") {
  std::mt19937 rng(90125);
  int hits = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int pk = 1 + int(rng() % 6);
    int hn = 1 + int(rng() % 8);
    auto pattern = random_graph(rng, pk, 0.5);
    auto host = random_graph(rng, hn, 0.5);
    auto got = is_full_subgraph(pattern, host);
    CHECK_FALSE(got.exhausted);
    bool want = brute_force_induced(pattern, host);
    CHECK(got.witness.has_value() == want);
    if (want) {
      ++hits;
      const auto& map = got.witness->vertex_map;
      REQUIRE(int(map.size()) == pk);
      for (int u = 0; u < pk; ++u)
        for (int v = u + 1; v < pk; ++v) {
          CHECK(map[u] != map[v]);
          CHECK(pattern.adjacent(u, v) == host.adjacent(map[u], map[v]));
        }
    }
  }
  CHECK(hits > 100);  // the sampling actually exercises both outcomes
}

TEST_CASE("identity embeddings") {
  std::mt19937 rng(1984);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + int(rng() % 12);
    auto g = random_graph(rng, n, 0.5);
    auto r = is_full_subgraph(g, g);
    REQUIRE(r.witness.has_value());
    // lexicographically least witness for g in itself is the identity
    for (int v = 0; v < n; ++v) CHECK(r.witness->vertex_map[v] == v);
  }
}

TEST_CASE("budget exhaustion is reported, not mistaken for no") {
  auto pattern = family(GraphFamily::Cycle, 8);
  auto host = complement(family(GraphFamily::Complete, 20));  // empty graph
  auto r = is_full_subgraph(pattern, host, 1);
  CHECK(r.exhausted);
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("serialization round trip") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng, 1 + int(rng() % 10), 0.5);
    CHECK(read_graph(write_graph(g)) == g);
  }
  CHECK_THROWS_AS(read_graph("nope"), ParseError);
  CHECK_THROWS_AS(read_graph("graph 2\ne 0 5\n"), ParseError);
}
