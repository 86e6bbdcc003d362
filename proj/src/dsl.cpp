#include "invol/dsl.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "invol/errors.hpp"

namespace invol {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  DslGraph run() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("dsl: empty expression", pos_);
    auto tree = expr();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError(std::string("dsl: unexpected '") + text_[pos_] + "'",
                       pos_);
    if (!tree || next_vertex_ == 0)
      throw ParseError("dsl: expression has no vertices", 0);
    Cotree t = normalize(std::move(*tree));
    return {cotree_graph(t, next_vertex_), std::move(t)};
  }

 private:
  // Empty optional means "no vertices" (a K0 or a combination of them).
  using Piece = std::optional<Cotree>;

  Piece expr() { return sequence('*', CotreeKind::Join, &Parser::term); }
  Piece term() { return sequence('+', CotreeKind::Union, &Parser::factor); }

  Piece sequence(char op, CotreeKind kind, Piece (Parser::*operand)()) {
    std::vector<Cotree> parts;
    auto push = [&parts](Piece p) {
      if (p) parts.push_back(std::move(*p));
    };
    push((this->*operand)());
    while (peek() == op) {
      ++pos_;
      push((this->*operand)());
    }
    return combine(kind, std::move(parts));
  }

  static Piece combine(CotreeKind kind, std::vector<Cotree> parts) {
    if (parts.empty()) return std::nullopt;
    if (parts.size() == 1) return std::move(parts.front());
    return Cotree::node(kind, std::move(parts));
  }

  Piece factor() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (peek() != ')') throw ParseError("dsl: expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (c == 'K') {
      ++pos_;
      const int m = uint_literal();
      std::vector<Cotree> vs;
      for (int i = 0; i < m; ++i) vs.push_back(Cotree::leaf(next_vertex_++));
      return combine(CotreeKind::Join, std::move(vs));
    }
    if (pos_ == text_.size())
      throw ParseError("dsl: unexpected end of input", pos_);
    throw ParseError(std::string("dsl: expected 'K' or '(' but found '") + c +
                         "'",
                     pos_);
  }

  int uint_literal() {
    skip_space();
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (next_vertex_ + value > kMaxDslOrder)
        throw ParseError("dsl: graph exceeds " +
                             std::to_string(kMaxDslOrder) + " vertices",
                         start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("dsl: expected a clique size", pos_);
    return static_cast<int>(value);
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int next_vertex_ = 0;
};

}  // namespace

DslGraph parse_block_dsl(std::string_view text) { return Parser(text).run(); }

}  // namespace invol
