#include "invol/block_form.hpp"

#include <algorithm>
#include <numeric>

#include "invol/errors.hpp"

namespace invol {

int BlockForm::order() const {
  int n = clique_size;
  for (const auto& b : blocks) n += b.a + b.b;
  return n;
}

bool BlockForm::is_canonical() const {
  if (clique_size < 0) return false;
  for (const auto& b : blocks)
    if (b.a < 1 || b.a > b.b) return false;
  return std::is_sorted(blocks.begin(), blocks.end());
}

BlockForm canonicalize(BlockForm bf) {
  BlockForm out;
  out.clique_size = bf.clique_size;
  for (auto b : bf.blocks) {
    if (b.a < 0 || b.b < 0) throw PreconditionError("negative block size");
    if (b.a > b.b) std::swap(b.a, b.b);
    if (b.a == 0)
      out.clique_size += b.b;
    else
      out.blocks.push_back(b);
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

std::string to_dsl(const BlockForm& bf) {
  std::string out;
  for (const auto& b : bf.blocks) {
    if (!out.empty()) out += '*';
    out += "(K" + std::to_string(b.a) + "+K" + std::to_string(b.b) + ")";
  }
  if (bf.clique_size > 0 || out.empty()) {
    if (!out.empty()) out += '*';
    out += "K" + std::to_string(bf.clique_size);
  }
  return out;
}

BlockForm BlockPartition::shape() const {
  BlockForm bf;
  bf.clique_size = static_cast<int>(clique.size());
  for (const auto& b : blocks)
    bf.blocks.push_back({static_cast<int>(b.a_side.size()),
                         static_cast<int>(b.b_side.size())});
  return bf;
}

std::vector<Vertex> BlockPartition::vertex_order() const {
  std::vector<Vertex> out;
  for (const auto& b : blocks) {
    out.insert(out.end(), b.a_side.begin(), b.a_side.end());
    out.insert(out.end(), b.b_side.begin(), b.b_side.end());
  }
  out.insert(out.end(), clique.begin(), clique.end());
  return out;
}

namespace {

// A join whose children are all leaves is a clique; so is a single leaf.
bool is_clique_node(const Cotree& t) {
  if (t.is_leaf()) return true;
  if (t.kind != CotreeKind::Join) return false;
  return std::all_of(t.children.begin(), t.children.end(),
                     [](const Cotree& c) { return c.is_leaf(); });
}

Coclique3 sorted_triple(Vertex x, Vertex y, Vertex z) {
  Coclique3 c{{x, y, z}};
  std::sort(c.vertices.begin(), c.vertices.end());
  return c;
}

// Two vertices inside a non-clique child plus one from its sibling.
Coclique3 coclique_in(const Cotree& non_clique, const Cotree& sibling) {
  for (const auto& w : non_clique.children) {
    if (w.is_leaf()) continue;
    return sorted_triple(min_leaf(w.children[0]), min_leaf(w.children[1]),
                         min_leaf(sibling));
  }
  throw std::logic_error("block form: clique misclassified");
}

}  // namespace

BlockExtraction extract_block_form(const Cotree& tree, const Graph& g) {
  const Cotree t = normalize(tree);
  if (static_cast<int>(leaves(t).size()) != g.order())
    throw PreconditionError("cotree does not match the graph's order");
  if (t.kind == CotreeKind::Union)
    throw PreconditionError(
        "extract_block_form requires a connected graph (root is a union)");

  BlockPartition part;
  if (t.is_leaf()) {
    part.clique.push_back(t.vertex);
    return part;
  }

  for (const auto& child : t.children) {
    if (child.is_leaf()) {
      part.clique.push_back(child.vertex);
      continue;
    }
    if (child.children.size() >= 3)
      return sorted_triple(min_leaf(child.children[0]),
                           min_leaf(child.children[1]),
                           min_leaf(child.children[2]));
    const Cotree& left = child.children[0];
    const Cotree& right = child.children[1];
    if (!is_clique_node(left)) return coclique_in(left, right);
    if (!is_clique_node(right)) return coclique_in(right, left);

    BlockVertices bv{leaves(left), leaves(right)};
    std::sort(bv.a_side.begin(), bv.a_side.end());
    std::sort(bv.b_side.begin(), bv.b_side.end());
    if (bv.a_side.size() > bv.b_side.size() ||
        (bv.a_side.size() == bv.b_side.size() &&
         bv.a_side.front() > bv.b_side.front()))
      std::swap(bv.a_side, bv.b_side);
    part.blocks.push_back(std::move(bv));
  }
  std::sort(part.clique.begin(), part.clique.end());
  std::sort(part.blocks.begin(), part.blocks.end(),
            [](const BlockVertices& x, const BlockVertices& y) {
              const Block bx{static_cast<int>(x.a_side.size()),
                             static_cast<int>(x.b_side.size())};
              const Block by{static_cast<int>(y.a_side.size()),
                             static_cast<int>(y.b_side.size())};
              if (bx != by) return bx < by;
              return x.a_side.front() < y.a_side.front();
            });
  return part;
}

BlockPartition canonical_layout(const BlockForm& bf) {
  BlockPartition part;
  Vertex next = 0;
  auto take = [&next](int count) {
    std::vector<Vertex> vs(count);
    std::iota(vs.begin(), vs.end(), next);
    next += count;
    return vs;
  };
  for (const auto& b : bf.blocks) {
    BlockVertices bv;
    bv.a_side = take(b.a);
    bv.b_side = take(b.b);
    part.blocks.push_back(std::move(bv));
  }
  part.clique = take(bf.clique_size);
  return part;
}

Graph realize_block_form(const BlockForm& bf) {
  const BlockPartition part = canonical_layout(bf);
  const int n = bf.order();
  // Every pair is adjacent except an a-side/b-side pair of the same block.
  Graph g = Graph::complete(n);
  for (const auto& b : part.blocks)
    for (Vertex x : b.a_side)
      for (Vertex y : b.b_side) g.remove_edge(x, y);
  return g;
}

}  // namespace invol
