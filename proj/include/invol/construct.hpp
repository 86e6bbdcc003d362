#pragma once

#include <optional>
#include <span>
#include <vector>

#include "invol/block_form.hpp"
#include "invol/classify.hpp"
#include "invol/matrix.hpp"
#include "invol/verify.hpp"
#include "invol/witness.hpp"

namespace invol {

/// Weights closer than this to a forbidden value are skipped.
inline constexpr double kWeightExclusion = 1e-6;

/// Distinct positive block weights.
struct WeightSet {
  std::vector<double> w;
  std::vector<double> forbidden;
};

/// The k smallest integers >= 4 that stay kWeightExclusion away from every
/// forbidden value.
WeightSet select_weights(int k, std::span<const double> forbidden);

/// Restrictions of u and v to one part of the vertex set.
struct VectorPair {
  std::vector<double> u;
  std::vector<double> v;
};

/// Rows (1, w) on K_a and sqrt(a/b) (-w, 1) on K_b: u.v = 0 and
/// |u|^2 = |v|^2 = a (1 + w^2) within the block. Requires 1 <= a <= b, w != 0.
VectorPair block_vectors(int a, int b, double w);

/// Self-balanced vectors on K_c, c >= 3:
///   u = (-t, 1, ..., 1, -(c-2)/(2t)),  v = ((c-2)/(2t), 1, ..., 1, t).
/// Requires t > 0 and t^2 != (c-2)/2 (that value zeroes a clique edge).
VectorPair clique_vectors(int c, double t);

/// t used for K_c: 1, except 2 when c = 4 (t = 1 has t^2 = (c-2)/2 there).
double clique_parameter(int c);

/// Forbidden weights for blocks joined to K_c built by clique_vectors(c, t).
std::vector<double> clique_forbidden_weights(int c, double t);

/// Parameters of (K_a ∪ K_b) ∇ (K_c ∪ K_d) ∇ K_1:
/// coef_a = 3a - 12b + 32c - 72d, coef_b = -2a + 8b - 12c + 27d, r the
/// positive root of s^2 + coef_a s - coef_b^2, y = sqrt(r), x = coef_b / y.
struct OneOneSolution {
  double coef_a = 0.0;
  double coef_b = 0.0;
  double r = 0.0;
  double x = 0.0;
  double y = 0.0;
};

/// Requires 1 <= a <= b, 1 <= c <= d. Throws std::logic_error if the root
/// leaves the bracket (2B, 3B).
OneOneSolution solve_oneone(int a, int b, int c, int d);

/// (K_{a1} ∪ K_{b1}) ∇ ... ∇ (K_{ak} ∪ K_{bk}), k >= 2.
WitnessPair construct_join_blocks(const BlockForm& bf);

/// Blocks joined with K_c, c >= 2, k >= 1.
WitnessPair construct_with_clique(const BlockForm& bf);

/// (K_a ∪ K_b) ∇ (K_c ∪ K_d) ∇ K_1, vertex order K_a, K_b, K_c, K_d, K_1.
WitnessPair construct_oneone(int a, int b, int c, int d);

/// Blocks joined with K_1, k >= 2.
WitnessPair construct_with_k1(const BlockForm& bf);

/// Dispatches on clique_size. The vertex order is canonical_layout(bf).
/// Throws NotConstructible for complete graphs, a single block without a
/// clique of size >= 2, and (K_a ∪ K_b) ∇ K_1.
WitnessPair construct_block_form(const BlockForm& bf);

/// (J - I) on the clique, -I on the isolated vertices; spectrum
/// {clique - 1, (-1)^(clique + isolated - 1)}.
Matrix construct_n1_1(int clique, int isolated);

/// K_a ∪ K_b ∪ isolated vertices, each clique shift-scaled to spectrum
/// {1, (-1)^(m-1)}, isolated vertices -1: spectrum {1^2, (-1)^(n-2)}.
Matrix construct_two_cliques(int a, int b, int isolated);

/// 2/(l1 - l2) B - (l1 + l2)/(l1 - l2) I, sending l1 to 1 and l2 to -1.
Matrix shift_scale(const Matrix& b, double lambda1, double lambda2);

enum class ConstructionKind { RankTwo, CompletePlusIsolated, TwoCliques };

struct Construction {
  ConstructionKind kind = ConstructionKind::RankTwo;
  /// Present for RankTwo.
  std::optional<WitnessPair> witness;
  /// Involution in S(g) with eigenvalues +-1.
  Matrix matrix;
  /// J - I form before shift-scaling (CompletePlusIsolated only).
  std::optional<Matrix> adjacency_form;
  int expected_neg_one_multiplicity = 2;
};

/// Witness for a graph classified MinimalN2_2 or CompletePlusIsolated, in the
/// graph's own vertex labels. Throws NotConstructible for other verdicts.
Construction construct(const Graph& g, const Classification& cls);

/// The disconnected MinimalN2_2 cases: two cliques plus isolated vertices,
/// or a connected witness padded with zero rows (diagonal +1) on isolated
/// vertices. Throws NotConstructible otherwise.
Construction construct_disconnected(const Graph& g, const Classification& cls);

VerifyReport verify_construction(const Construction& c, const Graph& g,
                                 const Tolerances& tol = {});

}  // namespace invol
