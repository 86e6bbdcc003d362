#include "invol/cotree.hpp"

#include <algorithm>
#include <stdexcept>

#include "invol/errors.hpp"

namespace invol {

std::string_view to_string(CotreeKind kind) {
  switch (kind) {
    case CotreeKind::Leaf:
      return "leaf";
    case CotreeKind::Union:
      return "union";
    case CotreeKind::Join:
      return "join";
  }
  return "?";
}

namespace {

void collect_leaves(const Cotree& t, std::vector<Vertex>& out) {
  if (t.is_leaf()) {
    out.push_back(t.vertex);
    return;
  }
  for (const auto& c : t.children) collect_leaves(c, out);
}

}  // namespace

std::vector<Vertex> leaves(const Cotree& t) {
  std::vector<Vertex> out;
  collect_leaves(t, out);
  return out;
}

Vertex min_leaf(const Cotree& t) {
  if (t.is_leaf()) return t.vertex;
  Vertex best = min_leaf(t.children.front());
  for (std::size_t i = 1; i < t.children.size(); ++i)
    best = std::min(best, min_leaf(t.children[i]));
  return best;
}

Cotree normalize(Cotree t) {
  if (t.is_leaf()) return t;
  std::vector<Cotree> flat;
  for (auto& child : t.children) {
    Cotree c = normalize(std::move(child));
    if (c.kind == t.kind) {
      for (auto& g : c.children) flat.push_back(std::move(g));
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.size() == 1) return std::move(flat.front());
  if (flat.empty())
    throw PreconditionError("cotree: internal node without children");
  std::sort(flat.begin(), flat.end(), [](const Cotree& a, const Cotree& b) {
    return min_leaf(a) < min_leaf(b);
  });
  t.children = std::move(flat);
  return t;
}

namespace {

bool canonical_node(const Cotree& t) {
  if (t.is_leaf()) return t.children.empty();
  if (t.children.size() < 2) return false;
  Vertex prev = -1;
  for (const auto& c : t.children) {
    if (c.kind == t.kind) return false;
    const Vertex m = min_leaf(c);
    if (m <= prev) return false;
    prev = m;
    if (!canonical_node(c)) return false;
  }
  return true;
}

}  // namespace

bool is_canonical(const Cotree& t, int n) {
  if (!canonical_node(t)) return false;
  auto ls = leaves(t);
  std::sort(ls.begin(), ls.end());
  if (static_cast<int>(ls.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    if (ls[i] != i) return false;
  return true;
}

namespace {

void add_join_edges(const Cotree& t, Graph& g) {
  if (t.is_leaf()) return;
  for (const auto& c : t.children) add_join_edges(c, g);
  if (t.kind != CotreeKind::Join) return;
  std::vector<std::vector<Vertex>> parts;
  for (const auto& c : t.children) parts.push_back(leaves(c));
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::size_t q = p + 1; q < parts.size(); ++q)
      for (Vertex x : parts[p])
        for (Vertex y : parts[q]) g.add_edge(x, y);
}

std::vector<Vertex> map_labels(const std::vector<Vertex>& local,
                               const std::vector<Vertex>& global) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(global[v]);
  return out;
}

// `vertices` is sorted ascending, so children come out ordered by least leaf.
CotreeResult build(const Graph& g, const std::vector<Vertex>& vertices) {
  if (vertices.size() == 1) return Cotree::leaf(vertices.front());

  const Graph h = g.induced(vertices);
  auto parts = components(h);
  CotreeKind kind = CotreeKind::Union;
  if (parts.size() == 1) {
    parts = components(complement(h));
    kind = CotreeKind::Join;
  }
  if (parts.size() == 1) {
    auto p4 = find_induced_p4(h);
    if (!p4)
      throw std::logic_error(
          "cotree: prime part without an induced P4 (graph invariant broken)");
    for (auto& v : p4->path) v = vertices[v];
    return *p4;
  }

  std::vector<Cotree> children;
  children.reserve(parts.size());
  for (const auto& part : parts) {
    auto sub = build(g, map_labels(part, vertices));
    if (auto* p4 = std::get_if<InducedP4>(&sub)) return *p4;
    children.push_back(std::move(std::get<Cotree>(sub)));
  }
  return Cotree::node(kind, std::move(children));
}

}  // namespace

Graph cotree_graph(const Cotree& t, int n) {
  Graph g(n);
  add_join_edges(t, g);
  return g;
}

CotreeResult build_cotree(const Graph& g) {
  if (g.order() < 1) throw PreconditionError("build_cotree requires n >= 1");
  std::vector<Vertex> all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = i;
  return build(g, all);
}

}  // namespace invol
