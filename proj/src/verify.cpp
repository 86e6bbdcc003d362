#include "invol/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "invol/errors.hpp"

namespace invol {

namespace {

void require_symmetric(const Matrix& a) {
  if (a.asymmetry() > 1e-12 * std::max(1.0, a.max_abs()))
    throw PreconditionError("matrix is not symmetric");
}

}  // namespace

double involution_residual(const Matrix& a) {
  require_symmetric(a);
  return (a * a - Matrix::identity(a.order())).max_abs();
}

PatternCheck pattern_conforms(const Matrix& a, const Graph& g,
                              double zero_threshold) {
  if (a.order() != g.order())
    throw PreconditionError("matrix and graph orders differ");
  const int n = a.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool nonzero = std::abs(a(i, j)) > zero_threshold;
      if (nonzero != g.adjacent(i, j)) return {false, Edge{i, j}};
    }
  return {true, std::nullopt};
}

int neg_one_multiplicity(const Matrix& a, double tolerance) {
  if (involution_residual(a) > 1e-6)
    throw PreconditionError("matrix is not an involution");
  const double m = (a.order() - a.trace()) / 2.0;
  const double r = std::round(m);
  if (std::abs(m - r) > tolerance)
    throw PreconditionError("trace does not give an integral multiplicity");
  return static_cast<int>(r);
}

std::vector<double> jacobi_eigenvalues(const Matrix& input, int max_sweeps) {
  require_symmetric(input);
  Matrix a = input;
  const int n = a.order();
  const double target = 1e-12 * a.frobenius_norm();

  auto off_norm = [&a, n] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };
  auto sorted_diagonal = [&a, n] {
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) d[i] = a(i, i);
    std::sort(d.begin(), d.end());
    return d;
  };

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_norm() <= target) return sorted_diagonal();
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation angle zeroing a_pq: cot(2 phi) = (a_qq - a_pp) / (2 a_pq).
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
  }
  if (off_norm() <= target) return sorted_diagonal();
  throw ConvergenceError("jacobi: no convergence after " +
                         std::to_string(max_sweeps) + " sweeps");
}

GramCheck gram_check(const WitnessPair& w, double tolerance) {
  const double uu = dot(w.u, w.u);
  const double vv = dot(w.v, w.v);
  const double uv = dot(w.u, w.v);
  GramCheck g;
  g.dot_ratio = (uu > 0 && vv > 0) ? std::abs(uv) / std::sqrt(uu * vv)
                                   : std::numeric_limits<double>::infinity();
  g.norm_gap = uu > 0 ? std::abs(uu - vv) / uu
                      : std::numeric_limits<double>::infinity();
  g.ok = g.dot_ratio <= tolerance && g.norm_gap <= tolerance;
  return g;
}

namespace {

std::string describe(const char* what, double value) {
  std::ostringstream os;
  os.precision(3);
  os << what << " " << std::scientific << value;
  return os.str();
}

}  // namespace

VerifyReport verify_matrix(const Matrix& a, const Graph& g,
                           int expected_neg_one_multiplicity,
                           const Tolerances& tol) {
  VerifyReport r;
  r.expected_neg_one_multiplicity = expected_neg_one_multiplicity;
  if (a.order() != g.order()) {
    r.failures.push_back("matrix order " + std::to_string(a.order()) +
                         " does not match graph order " +
                         std::to_string(g.order()));
    return r;
  }
  if (a.asymmetry() > 1e-12 * std::max(1.0, a.max_abs())) {
    r.failures.push_back("matrix is not symmetric");
    return r;
  }

  r.involution_residual = involution_residual(a);
  if (r.involution_residual > tol.involution)
    r.failures.push_back(
        describe("involution residual exceeds tolerance:", r.involution_residual));

  const PatternCheck pc = pattern_conforms(a, g, tol.zero);
  r.pattern_ok = pc.ok;
  r.offending = pc.offending;
  if (!pc.ok)
    r.failures.push_back("pattern mismatch at (" +
                         std::to_string(pc.offending->first) + "," +
                         std::to_string(pc.offending->second) + ")");

  if (r.involution_residual <= 1e-6) {
    try {
      r.neg_one_multiplicity = neg_one_multiplicity(a, tol.multiplicity);
    } catch (const PreconditionError& e) {
      r.failures.push_back(e.what());
    }
  } else {
    r.failures.push_back("multiplicity by trace skipped (not an involution)");
  }
  if (r.neg_one_multiplicity &&
      *r.neg_one_multiplicity != expected_neg_one_multiplicity)
    r.failures.push_back("multiplicity of -1 is " +
                         std::to_string(*r.neg_one_multiplicity) +
                         ", expected " +
                         std::to_string(expected_neg_one_multiplicity));

  try {
    r.eigenvalues = jacobi_eigenvalues(a);
    int minus = 0;
    bool off_spectrum = false;
    for (double x : r.eigenvalues) {
      if (std::abs(x + 1.0) <= tol.eigen)
        ++minus;
      else if (std::abs(x - 1.0) > tol.eigen)
        off_spectrum = true;
    }
    if (off_spectrum)
      r.failures.push_back("eigenvalue away from +-1");
    if (r.neg_one_multiplicity && minus != *r.neg_one_multiplicity)
      r.failures.push_back("eigensolver count of -1 is " +
                           std::to_string(minus) + ", trace gives " +
                           std::to_string(*r.neg_one_multiplicity));
  } catch (const ConvergenceError& e) {
    r.failures.push_back(e.what());
  }

  r.pass = r.failures.empty();
  return r;
}

VerifyReport verify_witness(const WitnessPair& w, const Graph& g,
                            const Tolerances& tol) {
  VerifyReport r = verify_matrix(w.matrix, g, 2, tol);
  if (w.u.size() != w.v.size() ||
      static_cast<int>(w.u.size()) != w.matrix.order()) {
    r.gram_ok = false;
    r.failures.push_back("witness vector lengths do not match the matrix");
    r.pass = false;
    return r;
  }
  const GramCheck gc = gram_check(w, tol.gram);
  r.gram = gc;
  r.gram_ok = gc.ok;
  if (!gc.ok)
    r.failures.push_back(describe("gram check failed: |u.v|/(|u||v|) =",
                                  gc.dot_ratio) +
                         describe(", norm gap", gc.norm_gap));

  // The stored matrix must be the one u and v generate.
  if (gc.ok && dot(w.u, w.u) > 0.0) {
    const Matrix rebuilt = make_witness(w.u, w.v).matrix;
    const double drift = (rebuilt - w.matrix).max_abs();
    if (drift > tol.involution)
      r.failures.push_back(describe("matrix differs from I - 2(uu'+vv')/|u|^2 by", drift));
  }
  r.pass = r.failures.empty();
  return r;
}

}  // namespace invol
