#pragma once

// Brute-force reference pipeline. Everything here is written against
// Graph::adjacent only, so it stays independent of the cotree path it checks.

#include <cstdint>
#include <vector>

#include "invol/block_form.hpp"
#include "invol/classify.hpp"
#include "invol/graph.hpp"

namespace invol::oracle {

/// Number of vertex pairs of an n-vertex graph.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Graph whose pair k (row-major over i < j) is an edge iff bit k is set.
Graph graph_from_mask(int n, std::uint64_t mask);

/// Calls f(g) for each of the 2^(n(n-1)/2) labeled graphs, n <= 8.
template <typename F>
void for_each_labeled_graph(int n, F&& f) {
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) f(graph_from_mask(n, mask));
}

bool has_p4(const Graph& g);
bool has_coclique3(const Graph& g);
std::vector<std::vector<Vertex>> components(const Graph& g);

/// Reference verdict: P4 scan, 3-coclique scan, and block check on
/// complement components.
Verdict verdict(const Graph& g);

/// splitmix64; integer draws by modulo so streams are platform independent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);
  /// Uniform in [0, 1).
  double unit();
  bool chance(double p) { return unit() < p; }

 private:
  std::uint64_t state_;
};

Graph random_graph(Rng& rng, int n, double edge_probability);
std::vector<Vertex> random_permutation(Rng& rng, int n);

/// Canonical block form with k blocks, 1 <= a <= b <= max_side, and the
/// given clique size.
BlockForm random_block_form(Rng& rng, int k, int max_side, int clique);

}  // namespace invol::oracle
