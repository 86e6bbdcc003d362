#include <doctest.h>

#include "invol/cotree.hpp"
#include "invol/dsl.hpp"
#include "invol/errors.hpp"
#include "support.hpp"

using namespace invol;
using namespace invol::test;

namespace {

Cotree L(Vertex v) { return Cotree::leaf(v); }
Cotree J(std::vector<Cotree> c) { return Cotree::node(CotreeKind::Join, std::move(c)); }
Cotree U(std::vector<Cotree> c) { return Cotree::node(CotreeKind::Union, std::move(c)); }

}  // namespace

TEST_CASE("build_cotree examples") {
  const auto k2 = build_cotree(Graph::complete(2));
  REQUIRE(std::holds_alternative<Cotree>(k2));
  CHECK(std::get<Cotree>(k2) == J({L(0), L(1)}));

  const auto c4 = build_cotree(cycle_graph(4));
  REQUIRE(std::holds_alternative<Cotree>(c4));
  CHECK(std::get<Cotree>(c4) == J({U({L(0), L(2)}), U({L(1), L(3)})}));

  const auto p4 = build_cotree(path_graph(4));
  REQUIRE(std::holds_alternative<InducedP4>(p4));
  CHECK(std::get<InducedP4>(p4).path == std::array<Vertex, 4>{0, 1, 2, 3});

  const auto k1 = build_cotree(Graph(1));
  REQUIRE(std::holds_alternative<Cotree>(k1));
  CHECK(std::get<Cotree>(k1) == L(0));

  CHECK_THROWS_AS(build_cotree(Graph(0)), PreconditionError);
}

TEST_CASE("normalize flattens, collapses and sorts") {
  const Cotree raw = J({J({L(3), L(1)}), U({L(2)}), L(0)});
  const Cotree n = normalize(raw);
  CHECK(n == J({L(0), L(1), L(2), L(3)}));
  CHECK(is_canonical(n, 4));
  CHECK_FALSE(is_canonical(raw, 4));
  CHECK_FALSE(is_canonical(J({L(0), L(0)}), 2));
}

TEST_CASE("recognition completeness and soundness, exhaustive n <= 6") {
  for (int n = 1; n <= 6; ++n)
    oracle::for_each_labeled_graph(n, [n](const Graph& g) {
      const auto r = build_cotree(g);
      const bool p4 = oracle::has_p4(g);
      REQUIRE(std::holds_alternative<Cotree>(r) == !p4);
      REQUIRE(find_induced_p4(g).has_value() == p4);
      if (const auto* t = std::get_if<Cotree>(&r)) {
        REQUIRE(is_canonical(*t, n));
        REQUIRE(cotree_graph(*t, n) == g);
      } else {
        const auto [a, b, c, d] = std::get<InducedP4>(r).path;
        REQUIRE((g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d)));
        REQUIRE(!(g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, d)));
      }
    });
}

namespace {

std::string random_expr(oracle::Rng& rng, int depth) {
  if (depth == 0 || rng.chance(0.3)) return "K" + std::to_string(rng.uniform(1, 3));
  const int parts = rng.uniform(2, 3);
  const char* op = rng.chance(0.5) ? "+" : "*";
  std::string s = "(";
  for (int i = 0; i < parts; ++i) s += (i ? op : "") + random_expr(rng, depth - 1);
  return s + ")";
}

}  // namespace

TEST_CASE("cotree of random DSL cographs reproduces the graph") {
  oracle::Rng rng(21);
  int tested = 0;
  while (tested < 150) {
    const DslGraph d = parse_block_dsl(random_expr(rng, 4));
    const int n = d.graph.order();
    if (n > 30) continue;
    ++tested;
    const auto perm = oracle::random_permutation(rng, n);
    const Graph g = relabel(d.graph, perm);
    const auto r = build_cotree(g);
    REQUIRE(std::holds_alternative<Cotree>(r));
    REQUIRE(cotree_graph(std::get<Cotree>(r), n) == g);
    REQUIRE(is_canonical(std::get<Cotree>(r), n));
    REQUIRE(cotree_graph(d.cotree, n) == d.graph);
  }
}
