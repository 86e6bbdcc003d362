#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "invol/cotree.hpp"
#include "invol/graph.hpp"

namespace invol {

/// One join factor K_a ∪ K_b with 1 <= a <= b.
struct Block {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Block&, const Block&) = default;
};

/// Shape (K_{a1} ∪ K_{b1}) ∇ ... ∇ (K_{ak} ∪ K_{bk}) ∇ K_c.
///
/// Canonical when every block has 1 <= a <= b and blocks are sorted. Factors
/// with a = 0 are plain cliques and live in `clique_size`.
struct BlockForm {
  std::vector<Block> blocks;
  int clique_size = 0;

  int order() const;
  int block_count() const { return static_cast<int>(blocks.size()); }
  bool is_canonical() const;

  friend bool operator==(const BlockForm&, const BlockForm&) = default;
};

/// Swaps a > b, drops empty blocks, absorbs a = 0 blocks into the clique and
/// sorts.
BlockForm canonicalize(BlockForm bf);

/// "(K1+K2)*(K1+K1)*K3". Empty shapes print as "K0".
std::string to_dsl(const BlockForm& bf);

/// Vertex sets of one block: a_side has the smaller clique.
struct BlockVertices {
  std::vector<Vertex> a_side;
  std::vector<Vertex> b_side;
  friend bool operator==(const BlockVertices&, const BlockVertices&) = default;
};

/// A block form together with the vertices that realize it inside a graph.
struct BlockPartition {
  std::vector<BlockVertices> blocks;
  std::vector<Vertex> clique;

  BlockForm shape() const;
  /// Block 1's a-side, block 1's b-side, ..., then the clique.
  std::vector<Vertex> vertex_order() const;

  friend bool operator==(const BlockPartition&, const BlockPartition&) =
      default;
};

using BlockExtraction = std::variant<BlockPartition, Coclique3>;

/// Reads the block form off the cotree of a connected cograph. A union below
/// the root with three children, or with a non-clique child, yields a
/// 3-coclique instead. Throws PreconditionError if the root is a union or the
/// cotree does not match `g`'s order.
BlockExtraction extract_block_form(const Cotree& t, const Graph& g);

/// The realized graph, vertices laid out as in canonical_layout().
Graph realize_block_form(const BlockForm& bf);
BlockPartition canonical_layout(const BlockForm& bf);

}  // namespace invol
