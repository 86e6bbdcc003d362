#pragma once

#include <string_view>

#include "invol/cotree.hpp"
#include "invol/graph.hpp"

namespace invol {

/// Largest vertex count a DSL expression may produce.
inline constexpr int kMaxDslOrder = 4096;

struct DslGraph {
  Graph graph;
  /// Canonical cotree of the construction.
  Cotree cotree;
};

/// Parses a cograph expression:
///
///   expr   := term ('*' term)*        '*' is join
///   term   := factor ('+' factor)*    '+' is disjoint union
///   factor := 'K' uint | '(' expr ')'
///
/// Whitespace is ignored. Vertices are numbered by left-to-right leaf order.
/// K0 contributes no vertices, but the whole expression must produce at
/// least one. Throws ParseError carrying the byte offset.
DslGraph parse_block_dsl(std::string_view text);

}  // namespace invol
