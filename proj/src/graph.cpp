#include "invol/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "invol/errors.hpp"

namespace invol {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw PreconditionError("graph order must be non-negative");
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [i, j] : edges) g.add_edge(i, j);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw PreconditionError("vertex " + std::to_string(v) +
                            " out of range for order " + std::to_string(n_));
}

void Graph::add_edge(Vertex i, Vertex j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j)
    throw PreconditionError("self-loop at vertex " + std::to_string(i));
  adj_[index(i, j)] = 1;
  adj_[index(j, i)] = 1;
}

void Graph::remove_edge(Vertex i, Vertex j) {
  check_vertex(i);
  check_vertex(j);
  adj_[index(i, j)] = 0;
  adj_[index(j, i)] = 0;
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  int d = 0;
  for (Vertex u = 0; u < n_; ++u) d += adjacent(v, u) ? 1 : 0;
  return d;
}

std::size_t Graph::edge_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) /
         2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex i = 0; i < n_; ++i)
    for (Vertex j = i + 1; j < n_; ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < n_; ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

bool Graph::is_complete() const {
  return edge_count() ==
         static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  const int m = static_cast<int>(vertices.size());
  for (Vertex v : vertices) check_vertex(v);
  Graph h(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (adjacent(vertices[a], vertices[b])) h.add_edge(a, b);
  return h;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph h(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) h.add_edge(i, j);
  return h;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      const Vertex v = comp[head];
      for (Vertex u = 0; u < n; ++u) {
        if (!seen[u] && g.adjacent(v, u)) {
          seen[u] = 1;
          comp.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw PreconditionError("permutation size does not match graph order");
  Graph h(n);
  for (auto [i, j] : g.edges()) h.add_edge(perm[i], perm[j]);
  return h;
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return (a > kSaturated - b) ? kSaturated : a + b;
}

struct BfsCounts {
  std::vector<int> dist;
  std::vector<std::uint64_t> sigma;
};

// sigma(y) = sum of sigma over BFS predecessors of y.
BfsCounts bfs_counts(const Graph& g, Vertex source) {
  const int n = g.order();
  BfsCounts r{std::vector<int>(n, -1), std::vector<std::uint64_t>(n, 0)};
  r.dist[source] = 0;
  r.sigma[source] = 1;
  std::queue<Vertex> queue;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (Vertex u = 0; u < n; ++u) {
      if (!g.adjacent(v, u)) continue;
      if (r.dist[u] < 0) {
        r.dist[u] = r.dist[v] + 1;
        queue.push(u);
      }
      if (r.dist[u] == r.dist[v] + 1)
        r.sigma[u] = saturating_add(r.sigma[u], r.sigma[v]);
    }
  }
  return r;
}

}  // namespace

std::optional<PathCertificate> count_shortest_paths(const Graph& g, Vertex x,
                                                    Vertex y) {
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order())
    throw PreconditionError("path endpoint out of range");
  if (x == y) throw PreconditionError("path endpoints must differ");
  const BfsCounts r = bfs_counts(g, x);
  if (r.dist[y] < 0) return std::nullopt;
  return PathCertificate{x, y, r.dist[y], r.sigma[y]};
}

std::optional<PathCertificate> longest_unique_path(const Graph& g) {
  std::optional<PathCertificate> best;
  const int n = g.order();
  for (Vertex x = 0; x < n; ++x) {
    const BfsCounts r = bfs_counts(g, x);
    for (Vertex y = x + 1; y < n; ++y) {
      if (r.dist[y] < 0 || r.sigma[y] != 1) continue;
      if (!best || r.dist[y] > best->distance)
        best = PathCertificate{x, y, r.dist[y], 1};
    }
  }
  return best;
}

int unique_path_bound(const Graph& g) {
  if (g.order() == 0) return 0;
  const auto pair = longest_unique_path(g);
  return pair ? std::max(1, pair->distance + 1) : 1;
}

std::optional<Coclique3> find_coclique_3(const Graph& g) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c)
        if (!g.adjacent(a, c) && !g.adjacent(b, c))
          return Coclique3{{a, b, c}};
    }
  return std::nullopt;
}

namespace {

// If the four vertices induce a P4, order them along the path.
std::optional<InducedP4> as_p4(const Graph& g, std::array<Vertex, 4> s) {
  int edges = 0;
  std::array<int, 4> deg{};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (g.adjacent(s[i], s[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
  // Three edges with no vertex of degree 3 and no isolated vertex is P4
  // (the alternatives with three edges are K3 + K1 and the star K_{1,3}).
  if (edges != 3) return std::nullopt;
  for (int d : deg)
    if (d == 0 || d == 3) return std::nullopt;

  int start = -1;
  for (int i = 0; i < 4; ++i)
    if (deg[i] == 1) {
      start = i;
      break;
    }
  InducedP4 p;
  std::array<bool, 4> used{};
  int cur = start;
  for (int k = 0; k < 4; ++k) {
    p.path[k] = s[cur];
    used[cur] = true;
    for (int j = 0; j < 4; ++j)
      if (!used[j] && g.adjacent(s[cur], s[j])) {
        cur = j;
        break;
      }
  }
  return p;
}

}  // namespace

std::optional<InducedP4> find_induced_p4(const Graph& g) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d)
          if (auto p = as_p4(g, {a, b, c, d})) return p;
  return std::nullopt;
}

}  // namespace invol
