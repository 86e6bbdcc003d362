#pragma once

#include <string>
#include <string_view>

#include "invol/graph.hpp"

namespace invol {

/// Largest order with a single-byte graph6 header.
inline constexpr int kMaxGraph6Order = 62;

/// Decodes one graph6 line (trailing '\n' / '\r' tolerated). Padding bits
/// must be zero. Throws ParseError.
Graph parse_graph6(std::string_view text);

/// Throws PreconditionError when n > kMaxGraph6Order.
std::string encode_graph6(const Graph& g);

/// "n i j i j ...", whitespace separated. Duplicate pairs are idempotent.
/// Throws ParseError on bad tokens, out-of-range indices or self-loops.
Graph parse_edge_list(std::string_view text);

std::string encode_edge_list(const Graph& g);

}  // namespace invol
