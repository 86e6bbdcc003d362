#include <doctest.h>

#include "invol/errors.hpp"
#include "invol/graph.hpp"
#include "support.hpp"

using namespace invol;
using namespace invol::test;

TEST_CASE("add_edge rejects self-loops and keeps symmetry") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), PreconditionError);
  CHECK_THROWS_AS(g.add_edge(0, 3), PreconditionError);
  g.add_edge(2, 0);
  g.add_edge(0, 2);
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 0));
  CHECK(g.edge_count() == 1);
  g.remove_edge(0, 2);
  CHECK(g.is_edgeless());
}

TEST_CASE("complement examples") {
  CHECK(complement(Graph::complete(3)) == edgeless(3));
  const Graph two_k2 = disjoint_union(Graph::complete(2), Graph::complete(2));
  CHECK(relabel(complement(cycle_graph(4)), std::vector<Vertex>{0, 2, 1, 3}) ==
        two_k2);
  CHECK(complement(Graph(0)).order() == 0);
}

TEST_CASE("complement is an involution") {
  for (int n = 0; n <= 5; ++n)
    oracle::for_each_labeled_graph(n, [](const Graph& g) {
      REQUIRE(complement(complement(g)) == g);
    });
  oracle::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(rng, rng.uniform(6, 8), rng.unit());
    REQUIRE(complement(complement(g)) == g);
  }
}

TEST_CASE("components examples") {
  const Graph g = disjoint_union(Graph::complete(2), Graph::complete(3));
  CHECK(components(g) == std::vector<std::vector<Vertex>>{{0, 1}, {2, 3, 4}});
  CHECK(components(cycle_graph(4)).size() == 1);
  CHECK(components(edgeless(3)) ==
        std::vector<std::vector<Vertex>>{{0}, {1}, {2}});
  CHECK(components(Graph(0)).empty());
  CHECK(is_connected(cycle_graph(4)));
  CHECK_FALSE(is_connected(g));
}

TEST_CASE("components agree with union-find oracle") {
  for (int n = 1; n <= 6; ++n)
    oracle::for_each_labeled_graph(n, [](const Graph& g) {
      auto expected = oracle::components(g);
      for (auto& c : expected) std::sort(c.begin(), c.end());
      std::sort(expected.begin(), expected.end());
      REQUIRE(components(g) == expected);
    });
}

TEST_CASE("count_shortest_paths examples") {
  const auto p4 = count_shortest_paths(path_graph(4), 0, 3);
  REQUIRE(p4);
  CHECK(p4->distance == 3);
  CHECK(p4->shortest_path_count == 1);

  const auto c4 = count_shortest_paths(cycle_graph(4), 0, 2);
  REQUIRE(c4);
  CHECK(c4->distance == 2);
  CHECK(c4->shortest_path_count == 2);

  const auto k3 = count_shortest_paths(Graph::complete(3), 1, 2);
  REQUIRE(k3);
  CHECK(k3->distance == 1);
  CHECK(k3->shortest_path_count == 1);

  CHECK_FALSE(count_shortest_paths(edgeless(2), 0, 1));
  CHECK_THROWS_AS(count_shortest_paths(path_graph(2), 1, 1), PreconditionError);
}

TEST_CASE("count_shortest_paths agrees with DFS path enumeration") {
  for (int n = 2; n <= 6; ++n)
    oracle::for_each_labeled_graph(n, [n](const Graph& g) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          if (x == y) continue;
          const auto [d, count] = dfs_shortest_paths(g, x, y);
          const auto pc = count_shortest_paths(g, x, y);
          if (d < 0) {
            REQUIRE_FALSE(pc);
            continue;
          }
          REQUIRE(pc);
          REQUIRE(pc->distance == d);
          REQUIRE(pc->shortest_path_count == count);
          REQUIRE(pc->shortest_path_count >= 1);
        }
    });
}

TEST_CASE("unique_path_bound examples") {
  CHECK(unique_path_bound(path_graph(4)) == 4);
  CHECK(unique_path_bound(cycle_graph(6)) == 3);
  CHECK(unique_path_bound(Graph(0)) == 0);
  CHECK(unique_path_bound(edgeless(3)) == 1);
  for (int n = 1; n <= 10; ++n) CHECK(unique_path_bound(path_graph(n)) == n);
  const auto lup = longest_unique_path(path_graph(5));
  REQUIRE(lup);
  CHECK(lup->x == 0);
  CHECK(lup->y == 4);
}

TEST_CASE("unique_path_bound is at least 2 with an edge and matches DFS") {
  for (int n = 2; n <= 6; ++n)
    oracle::for_each_labeled_graph(n, [n](const Graph& g) {
      int best = 0;
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          const auto [d, count] = dfs_shortest_paths(g, x, y);
          if (d > 0 && count == 1) best = std::max(best, d);
        }
      REQUIRE(unique_path_bound(g) == std::max(1, best + 1));
      if (!g.is_edgeless()) REQUIRE(unique_path_bound(g) >= 2);
    });
}

TEST_CASE("has_coclique_3 examples") {
  CHECK_FALSE(has_coclique_3(path_graph(4)));
  const auto t = find_coclique_3(edgeless(3));
  REQUIRE(t);
  CHECK(t->vertices == std::array<Vertex, 3>{0, 1, 2});
  CHECK(has_coclique_3(cycle_graph(6)));
}

TEST_CASE("coclique-free graphs stay coclique-free under vertex deletion") {
  oracle::Rng rng(5);
  int tested = 0;
  while (tested < 200) {
    Graph g = oracle::random_graph(rng, rng.uniform(4, 9), 0.7);
    if (has_coclique_3(g)) continue;
    ++tested;
    while (g.order() > 0) {
      std::vector<Vertex> keep;
      const int drop = rng.uniform(0, g.order() - 1);
      for (int v = 0; v < g.order(); ++v)
        if (v != drop) keep.push_back(v);
      g = g.induced(keep);
      REQUIRE_FALSE(has_coclique_3(g));
    }
  }
}

TEST_CASE("coclique scan agrees with oracle") {
  for (int n = 0; n <= 6; ++n)
    oracle::for_each_labeled_graph(n, [](const Graph& g) {
      const auto c = find_coclique_3(g);
      REQUIRE(c.has_value() == oracle::has_coclique3(g));
      if (c) {
        const auto [a, b, d] = c->vertices;
        REQUIRE((!g.adjacent(a, b) && !g.adjacent(a, d) && !g.adjacent(b, d)));
      }
    });
}

TEST_CASE("find_induced_p4 examples") {
  const auto p = find_induced_p4(path_graph(4));
  REQUIRE(p);
  CHECK(p->path == std::array<Vertex, 4>{0, 1, 2, 3});
  CHECK_FALSE(find_induced_p4(cycle_graph(4)));
  CHECK(find_induced_p4(cycle_graph(5)));
}

TEST_CASE("find_induced_p4 agrees with ordered brute-force scan") {
  for (int n = 0; n <= 6; ++n)
    oracle::for_each_labeled_graph(n, [](const Graph& g) {
      const auto p = find_induced_p4(g);
      REQUIRE(p.has_value() == oracle::has_p4(g));
      if (p) {
        const auto [a, b, c, d] = p->path;
        REQUIRE(g.adjacent(a, b));
        REQUIRE(g.adjacent(b, c));
        REQUIRE(g.adjacent(c, d));
        REQUIRE_FALSE(g.adjacent(a, c));
        REQUIRE_FALSE(g.adjacent(a, d));
        REQUIRE_FALSE(g.adjacent(b, d));
      }
    });
}

TEST_CASE("relabel and induced") {
  const Graph p = path_graph(3);
  const Graph r = relabel(p, std::vector<Vertex>{2, 0, 1});
  CHECK(r.adjacent(2, 0));
  CHECK(r.adjacent(0, 1));
  CHECK_FALSE(r.adjacent(2, 1));
  const Graph sub = cycle_graph(5).induced(std::vector<Vertex>{0, 1, 2});
  CHECK(sub == path_graph(3));
}
