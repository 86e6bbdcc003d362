#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "invol/graph.hpp"
#include "invol/matrix.hpp"
#include "invol/witness.hpp"

namespace invol {

struct Tolerances {
  double involution = 1e-8;    // max |(A^2 - I)_ij|
  double zero = 1e-10;         // |a_ij| <= zero counts as a zero entry
  double gram = 1e-9;          // relative orthogonality / norm gap of (u, v)
  double multiplicity = 1e-6;  // distance of (n - tr A) / 2 from an integer
  double eigen = 1e-6;         // eigenvalue distance from +-1
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// max |(A A - I)_ij|. Throws PreconditionError if A is not symmetric.
double involution_residual(const Matrix& a);

struct PatternCheck {
  bool ok = true;
  /// First (row-major, i < j) pair whose zero/nonzero status disagrees with
  /// adjacency.
  std::optional<Edge> offending;
};

/// Off-diagonal support of A against the edges of g; the diagonal is free.
PatternCheck pattern_conforms(const Matrix& a, const Graph& g,
                              double zero_threshold = 1e-10);

/// round((n - tr A) / 2) for an involution. Throws PreconditionError when the
/// involution residual exceeds 1e-6 or the value is not within `tolerance`
/// of an integer.
int neg_one_multiplicity(const Matrix& a, double tolerance = 1e-6);

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is at most
/// 1e-12 |A|_F. Ascending. Throws ConvergenceError after `max_sweeps`.
std::vector<double> jacobi_eigenvalues(const Matrix& a, int max_sweeps = 100);

struct GramCheck {
  double dot_ratio = 0.0;  // |u.v| / (|u| |v|)
  double norm_gap = 0.0;   // ||u|^2 - |v|^2| / |u|^2
  bool ok = false;
};

GramCheck gram_check(const WitnessPair& w, double tolerance = 1e-9);

struct VerifyReport {
  double involution_residual = 0.0;
  bool pattern_ok = false;
  std::optional<Edge> offending;
  /// Absent when only a matrix was checked.
  std::optional<bool> gram_ok;
  std::optional<GramCheck> gram;
  std::optional<int> neg_one_multiplicity;
  int expected_neg_one_multiplicity = 2;
  std::vector<double> eigenvalues;
  bool pass = false;
  std::vector<std::string> failures;
};

/// Involution residual, sparsity pattern, multiplicity by trace, and the
/// Jacobi spectrum (every eigenvalue within tol of +-1, count of -1 equal
/// to the trace multiplicity). Failures are reported, never thrown.
VerifyReport verify_matrix(const Matrix& a, const Graph& g,
                           int expected_neg_one_multiplicity,
                           const Tolerances& tol = {});

/// verify_matrix with expected multiplicity 2, plus the Gram checks on u, v
/// and agreement of the stored matrix with the one rebuilt from u, v.
VerifyReport verify_witness(const WitnessPair& w, const Graph& g,
                            const Tolerances& tol = {});

}  // namespace invol
