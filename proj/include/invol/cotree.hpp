#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "invol/graph.hpp"

namespace invol {

enum class CotreeKind { Leaf, Union, Join };

std::string_view to_string(CotreeKind kind);

/// Union/join decomposition tree of a cograph. In canonical form every
/// internal node has at least two children, kinds alternate along every
/// root-to-leaf path, and children are ordered by their least leaf.
struct Cotree {
  CotreeKind kind = CotreeKind::Leaf;
  Vertex vertex = 0;  // meaningful for leaves only
  std::vector<Cotree> children;

  static Cotree leaf(Vertex v) { return Cotree{CotreeKind::Leaf, v, {}}; }
  static Cotree node(CotreeKind kind, std::vector<Cotree> children) {
    return Cotree{kind, 0, std::move(children)};
  }

  bool is_leaf() const noexcept { return kind == CotreeKind::Leaf; }

  friend bool operator==(const Cotree&, const Cotree&) = default;
};

/// Leaves in left-to-right order.
std::vector<Vertex> leaves(const Cotree& t);
Vertex min_leaf(const Cotree& t);

/// Flattens same-kind nesting, collapses single-child nodes and orders
/// children by least leaf.
Cotree normalize(Cotree t);

/// Checks the canonical-form invariants listed on Cotree, plus that the
/// leaves are exactly {0, ..., n-1}.
bool is_canonical(const Cotree& t, int n);

/// The graph a cotree denotes on `n` vertices.
Graph cotree_graph(const Cotree& t, int n);

using CotreeResult = std::variant<Cotree, InducedP4>;

/// Recursive recognition: split on components, then on co-components, and
/// report an induced P4 when a part of size > 1 is connected in both the
/// graph and its complement. Requires n >= 1.
CotreeResult build_cotree(const Graph& g);

}  // namespace invol
