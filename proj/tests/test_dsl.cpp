#include <doctest.h>

#include "invol/dsl.hpp"
#include "invol/errors.hpp"
#include "support.hpp"

using namespace invol;
using namespace invol::test;

TEST_CASE("dsl examples") {
  const Graph c4 = parse_block_dsl("(K1+K1)*(K1+K1)").graph;
  CHECK(c4.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
  CHECK_FALSE(c4.adjacent(0, 1));
  CHECK_FALSE(c4.adjacent(2, 3));

  CHECK(parse_block_dsl("K3").graph == Graph::complete(3));

  const Graph g = parse_block_dsl("(K2+K3)*K1").graph;
  CHECK(g == join(disjoint_union(Graph::complete(2), Graph::complete(3)), Graph(1)));
}

TEST_CASE("dsl precedence and whitespace") {
  CHECK(parse_block_dsl("K1+K1*K1").graph == parse_block_dsl("(K1+K1)*K1").graph);
  CHECK(parse_block_dsl(" ( K1 + K2 ) *\tK3 ").graph ==
        parse_block_dsl("(K1+K2)*K3").graph);
  CHECK(parse_block_dsl("K2+K0").graph == Graph::complete(2));
  CHECK(parse_block_dsl("(K0+K2)*K1").graph == Graph::complete(3));
  CHECK(parse_block_dsl("((K1))").graph == Graph(1));
}

TEST_CASE("dsl errors carry offsets") {
  CHECK_THROWS_AS(parse_block_dsl(""), ParseError);
  CHECK_THROWS_AS(parse_block_dsl("   "), ParseError);
  CHECK_THROWS_AS(parse_block_dsl("K0"), ParseError);
  CHECK_THROWS_AS(parse_block_dsl("K0+K0"), ParseError);
  CHECK_THROWS_AS(parse_block_dsl("K99999"), ParseError);
  CHECK_THROWS_AS(parse_block_dsl("K"), ParseError);
  CHECK_THROWS_AS(parse_block_dsl("(K1"), ParseError);
  CHECK_THROWS_AS(parse_block_dsl("K1)"), ParseError);
  CHECK_THROWS_AS(parse_block_dsl("K1**K2"), ParseError);
  try {
    parse_block_dsl("(K1+K2)*X");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 8);
  }
}

TEST_CASE("dsl cotree denotes the graph") {
  for (const char* s : {"K1", "K5", "(K1+K1)*(K1+K1)", "((K1+K2)*K1)+K3",
                        "(K2+K3)*(K1+K4)*K2", "K1+K1+K1"}) {
    const DslGraph d = parse_block_dsl(s);
    CHECK(is_canonical(d.cotree, d.graph.order()));
    CHECK(cotree_graph(d.cotree, d.graph.order()) == d.graph);
  }
}
