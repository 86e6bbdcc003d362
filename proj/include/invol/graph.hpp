#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace invol {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1, stored as a dense adjacency
/// matrix. Adjacency is kept symmetric and irreflexive by every mutator.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }

  bool adjacent(Vertex i, Vertex j) const {
    return adj_[index(i, j)] != 0;
  }

  /// Idempotent. Throws PreconditionError on a self-loop or bad index.
  void add_edge(Vertex i, Vertex j);
  void remove_edge(Vertex i, Vertex j);

  int degree(Vertex v) const;
  std::size_t edge_count() const;
  /// Edges (i, j) with i < j, in row-major order.
  std::vector<Edge> edges() const;
  std::vector<Vertex> neighbors(Vertex v) const;

  bool is_complete() const;
  bool is_edgeless() const { return edge_count() == 0; }

  /// Subgraph induced on `vertices`; vertex k of the result is vertices[k].
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t index(Vertex i, Vertex j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

/// Distance and number of distinct shortest paths between two vertices.
struct PathCertificate {
  Vertex x = 0;
  Vertex y = 0;
  int distance = 0;
  /// Saturates at UINT64_MAX; only "== 1" matters to callers.
  std::uint64_t shortest_path_count = 0;

  friend bool operator==(const PathCertificate&,
                         const PathCertificate&) = default;
};

/// Ordered (a, b, c, d) whose only edges among the six pairs are ab, bc, cd.
struct InducedP4 {
  std::array<Vertex, 4> path{};
  friend bool operator==(const InducedP4&, const InducedP4&) = default;
};

/// Three pairwise non-adjacent vertices, ascending.
struct Coclique3 {
  std::array<Vertex, 3> vertices{};
  friend bool operator==(const Coclique3&, const Coclique3&) = default;
};

Graph complement(const Graph& g);

/// Connected components; each sorted, list sorted by least element.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);

/// Relabels: vertex v of `g` becomes perm[v] in the result.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// BFS distance and shortest-path count from x to y. Empty when y is
/// unreachable. Requires x != y.
std::optional<PathCertificate> count_shortest_paths(const Graph& g, Vertex x,
                                                    Vertex y);

/// The pair realizing the largest distance among pairs joined by a unique
/// shortest path (lexicographically first on ties), if any pair is connected.
std::optional<PathCertificate> longest_unique_path(const Graph& g);

/// Lower bound on the number of distinct eigenvalues: a unique shortest path
/// of length d forces at least d + 1. Floors at 1 for n >= 1, 0 for n = 0.
int unique_path_bound(const Graph& g);

/// Exhaustive O(n^3) scan; returns the lexicographically first triple.
std::optional<Coclique3> find_coclique_3(const Graph& g);
inline bool has_coclique_3(const Graph& g) {
  return find_coclique_3(g).has_value();
}

/// Exhaustive O(n^4) scan over 4-subsets. The tuple starts at the smaller
/// endpoint of the path.
std::optional<InducedP4> find_induced_p4(const Graph& g);

}  // namespace invol
