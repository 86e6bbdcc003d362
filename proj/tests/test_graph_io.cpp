#include <doctest.h>

#include <string>

#include "invol/errors.hpp"
#include "invol/graph_io.hpp"
#include "support.hpp"

using namespace invol;
using namespace invol::test;

namespace {

// Bit-by-bit graph6 writer kept separate from the library encoder.
std::string reference_graph6(const Graph& g) {
  std::string s(1, static_cast<char>(g.order() + 63));
  int bits = 0;
  int acc = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        s += static_cast<char>(acc + 63);
        bits = acc = 0;
      }
    }
  if (bits > 0) s += static_cast<char>((acc << (6 - bits)) + 63);
  return s;
}

}  // namespace

TEST_CASE("graph6 decode examples") {
  const Graph k1 = parse_graph6("@");
  CHECK(k1.order() == 1);
  CHECK(k1.is_edgeless());
  CHECK(parse_graph6("C~") == Graph::complete(4));
  CHECK(parse_graph6("Bw") == Graph::complete(3));
  CHECK(parse_graph6("C~\r\n") == Graph::complete(4));
  CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);   // padding bit set
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);    // too short
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);  // too long
  CHECK_THROWS_AS(parse_graph6("C~ "), ParseError);  // byte below 63
  CHECK_THROWS_AS(parse_graph6("~"), ParseError);    // multi-byte header
  CHECK_THROWS_AS(parse_graph6(std::string("C\x7f")), ParseError);
}

TEST_CASE("graph6 encode examples") {
  CHECK(encode_graph6(Graph(1)) == "@");
  CHECK(encode_graph6(Graph(0)) == "?");
  const std::string c4 = encode_graph6(cycle_graph(4));
  CHECK(c4.size() == 2);
  CHECK(parse_graph6(c4) == cycle_graph(4));
  CHECK_THROWS_AS(encode_graph6(Graph(63)), PreconditionError);
  CHECK(parse_graph6(encode_graph6(path_graph(62))) == path_graph(62));
}

TEST_CASE("graph6 round trip on all labeled graphs n <= 6") {
  for (int n = 0; n <= 6; ++n)
    oracle::for_each_labeled_graph(n, [](const Graph& g) {
      const std::string s = encode_graph6(g);
      REQUIRE(s == reference_graph6(g));
      REQUIRE(parse_graph6(s) == g);
      REQUIRE(encode_graph6(parse_graph6(s)) == s);
    });
}

TEST_CASE("edge list examples") {
  CHECK(parse_edge_list("3 0 1 1 2") == path_graph(3));
  CHECK(parse_edge_list("2") == Graph(2));
  CHECK(parse_edge_list("  3\n0 1\n1 2\n0 1\n") == path_graph(3));
  CHECK_THROWS_AS(parse_edge_list("2 0 0"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2 0 2"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 0"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 0 x"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("-1"), ParseError);
}

TEST_CASE("edge list round trip") {
  oracle::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(rng, rng.uniform(0, 12), 0.4);
    REQUIRE(parse_edge_list(encode_edge_list(g)) == g);
  }
}

TEST_CASE("edge list error carries an offset") {
  try {
    parse_edge_list("3\n0 1\n1 7\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 8);
  }
}
