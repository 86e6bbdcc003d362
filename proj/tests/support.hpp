#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "invol/graph.hpp"
#include "oracle.hpp"

namespace invol::test {

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [i, j] : a.edges()) g.add_edge(i, j);
  for (auto [i, j] : b.edges()) g.add_edge(a.order() + i, a.order() + j);
  return g;
}

inline Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < b.order(); ++j) g.add_edge(i, a.order() + j);
  return g;
}

inline Graph edgeless(int n) { return Graph(n); }

// All shortest x-y paths by depth-first enumeration of simple paths.
inline std::pair<int, std::uint64_t> dfs_shortest_paths(const Graph& g, int x,
                                                       int y) {
  int best = -1;
  std::uint64_t count = 0;
  std::vector<char> seen(g.order(), 0);
  std::function<void(int, int)> go = [&](int v, int len) {
    if (best >= 0 && len > best) return;
    if (v == y) {
      if (best < 0 || len < best) {
        best = len;
        count = 0;
      }
      ++count;
      return;
    }
    seen[v] = 1;
    for (int w = 0; w < g.order(); ++w)
      if (g.adjacent(v, w) && !seen[w]) go(w, len + 1);
    seen[v] = 0;
  };
  go(x, 0);
  return {best, count};
}

}  // namespace invol::test
