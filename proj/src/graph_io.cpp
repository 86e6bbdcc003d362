#include "invol/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <vector>

#include "invol/errors.hpp"

namespace invol {

namespace {

std::string_view strip_line_end(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  return text;
}

std::size_t bit_count(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = strip_line_end(text);
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw ParseError("graph6: byte outside the printable range 63..126", i);
  }
  const int header = static_cast<unsigned char>(text[0]) - 63;
  if (header > kMaxGraph6Order)
    throw ParseError("graph6: multi-byte size headers (n > 62) unsupported",
                     0);

  const int n = header;
  const std::size_t bits = n > 1 ? bit_count(n) : 0;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() != expected)
    throw ParseError("graph6: expected " + std::to_string(expected) +
                         " bytes for n = " + std::to_string(n) + ", got " +
                         std::to_string(text.size()),
                     std::min(text.size(), expected));

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (; k % 6 != 0; ++k) {
    const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
    if ((byte >> (5 - k % 6)) & 1)
      throw ParseError("graph6: nonzero padding bits", 1 + k / 6);
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order)
    throw PreconditionError("graph6 encoding supports n <= 62");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    const std::size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i > start) out.push_back({text.substr(start, i - start), start});
  }
  return out;
}

int to_int(const Token& t) {
  int value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value < 0)
    throw ParseError("edge list: expected a non-negative integer, got '" +
                         std::string(t.text) + "'",
                     t.offset);
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("edge list: missing vertex count", 0);
  const int n = to_int(tokens[0]);
  if ((tokens.size() - 1) % 2 != 0)
    throw ParseError("edge list: odd number of endpoint tokens",
                     tokens.back().offset);
  Graph g(n);
  for (std::size_t k = 1; k < tokens.size(); k += 2) {
    const int i = to_int(tokens[k]);
    const int j = to_int(tokens[k + 1]);
    if (i >= n || j >= n)
      throw ParseError("edge list: vertex index out of range",
                       tokens[i >= n ? k : k + 1].offset);
    if (i == j)
      throw ParseError("edge list: self-loop at vertex " + std::to_string(i),
                       tokens[k].offset);
    g.add_edge(i, j);
  }
  return g;
}

std::string encode_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order());
  for (auto [i, j] : g.edges())
    out += "  " + std::to_string(i) + " " + std::to_string(j);
  return out;
}

}  // namespace invol
