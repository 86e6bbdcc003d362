#pragma once

#include <span>
#include <vector>

#include "invol/graph.hpp"
#include "invol/matrix.hpp"

namespace invol {

/// Orthogonal, equal-norm vectors u, v and the matrix
/// A = I - (2 / |u|^2) (u u^T + v v^T), whose eigenvalue -1 has multiplicity
/// two when u and v are nonzero.
struct WitnessPair {
  std::vector<double> u;
  std::vector<double> v;
  double scale = 0.0;  // |u|^2
  Matrix matrix;
};

double dot(std::span<const double> x, std::span<const double> y);

/// Builds A from u and v. Throws PreconditionError on size mismatch or u = 0.
WitnessPair make_witness(std::vector<double> u, std::vector<double> v);

/// Moves entry i of the witness to vertex labels[i] of an n-vertex graph.
/// Vertices not in `labels` get zero rows (diagonal entry 1 in A).
WitnessPair scatter(const WitnessPair& w, std::span<const Vertex> labels,
                    int n);

}  // namespace invol
