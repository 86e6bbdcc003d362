#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace invol::oracle {

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int k = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++k)
      if ((mask >> k) & 1) g.add_edge(i, j);
  return g;
}

bool has_p4(const Graph& g) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b) {
      if (b == a || !g.adjacent(a, b)) continue;
      for (Vertex c = 0; c < n; ++c) {
        if (c == a || c == b || !g.adjacent(b, c) || g.adjacent(a, c)) continue;
        for (Vertex d = 0; d < n; ++d) {
          if (d == a || d == b || d == c) continue;
          if (g.adjacent(c, d) && !g.adjacent(a, d) && !g.adjacent(b, d))
            return true;
        }
      }
    }
  return false;
}

bool has_coclique3(const Graph& g) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (!g.adjacent(a, b) && !g.adjacent(a, c) && !g.adjacent(b, c))
          return true;
  return false;
}

namespace {

// Union-find over `vertices` of the relation "adjacent" (or "non-adjacent").
std::vector<std::vector<Vertex>> classes(const Graph& g,
                                         const std::vector<Vertex>& vertices,
                                         bool complement) {
  const int m = static_cast<int>(vertices.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(vertices[i], vertices[j]) != complement)
        parent[find(i)] = find(j);
  std::vector<std::vector<Vertex>> out;
  std::vector<int> slot(m, -1);
  for (int i = 0; i < m; ++i) {
    const int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(vertices[i]);
  }
  return out;
}

std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> vs(g.order());
  std::iota(vs.begin(), vs.end(), 0);
  return vs;
}

bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

Verdict connected_verdict(const Graph& g) {
  const auto vs = all_vertices(g);
  if (g.order() == 1) return Verdict::EmptyQ1;
  if (is_clique(g, vs)) return Verdict::CompletePlusIsolated;
  if (has_p4(g) || has_coclique3(g)) return Verdict::OutOfScope;

  int universal = 0;
  int blocks = 0;
  for (const auto& cc : classes(g, vs, /*complement=*/true)) {
    if (cc.size() == 1) {
      ++universal;
      continue;
    }
    const auto inner = classes(g, cc, /*complement=*/false);
    if (inner.size() != 2 || !is_clique(g, inner[0]) || !is_clique(g, inner[1]))
      return Verdict::OutOfScope;
    ++blocks;
  }
  if (blocks == 1 && universal == 1) return Verdict::NoBipartitionQge3;
  return Verdict::MinimalN2_2;
}

}  // namespace

std::vector<std::vector<Vertex>> components(const Graph& g) {
  return classes(g, all_vertices(g), false);
}

Verdict verdict(const Graph& g) {
  if (g.order() == 0) return Verdict::EmptyQ1;
  const auto comps = oracle::components(g);
  if (comps.size() == 1) return connected_verdict(g);

  std::vector<std::vector<Vertex>> big;
  for (const auto& c : comps)
    if (c.size() >= 2) big.push_back(c);
  if (big.empty()) return Verdict::EmptyQ1;
  if (big.size() == 1) {
    const Verdict v = connected_verdict(g.induced(big[0]));
    if (v == Verdict::CompletePlusIsolated || v == Verdict::MinimalN2_2)
      return v;
    return Verdict::OutOfScope;
  }
  if (big.size() == 2 && is_clique(g, big[0]) && is_clique(g, big[1]))
    return Verdict::MinimalN2_2;
  return Verdict::OutOfScope;
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(next() % span);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Graph random_graph(Rng& rng, int n, double p) {
  Graph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng.chance(p)) g.add_edge(i, j);
  return g;
}

std::vector<Vertex> random_permutation(Rng& rng, int n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.uniform(0, i)]);
  return p;
}

BlockForm random_block_form(Rng& rng, int k, int max_side, int clique) {
  BlockForm bf;
  bf.clique_size = clique;
  for (int i = 0; i < k; ++i) {
    const int a = rng.uniform(1, max_side);
    const int b = rng.uniform(a, max_side);
    bf.blocks.push_back({a, b});
  }
  std::sort(bf.blocks.begin(), bf.blocks.end());
  return bf;
}

}  // namespace invol::oracle
