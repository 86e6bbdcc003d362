#include <doctest.h>

#include <cmath>

#include "invol/block_form.hpp"
#include "invol/construct.hpp"
#include "invol/errors.hpp"
#include "invol/verify.hpp"
#include "support.hpp"

using namespace invol;
using namespace invol::test;

namespace {

Matrix diag(std::vector<double> d) {
  Matrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.order(); ++i) m(i, i) = d[i];
  return m;
}

WitnessPair c4_witness() { return construct_join_blocks({{{1, 1}, {1, 1}}, 0}); }

// C4 with the canonical layout's labels: blocks {0,1}, {2,3}.
Graph c4_layout() { return realize_block_form({{{1, 1}, {1, 1}}, 0}); }

}  // namespace

TEST_CASE("involution_residual examples") {
  for (int n : {1, 4, 9}) CHECK(involution_residual(Matrix::identity(n)) == 0.0);
  CHECK(involution_residual(diag({1, -1})) == 0.0);
  CHECK(involution_residual(Matrix(2, 1.0)) == 2.0);
  Matrix asym(2);
  asym(0, 1) = 1;
  CHECK_THROWS_AS(involution_residual(asym), PreconditionError);
}

TEST_CASE("pattern_conforms examples") {
  CHECK(pattern_conforms(construct_n1_1(3, 0), Graph::complete(3)).ok);
  const PatternCheck p = pattern_conforms(Matrix::identity(2), Graph::complete(2));
  CHECK_FALSE(p.ok);
  REQUIRE(p.offending);
  CHECK(*p.offending == Edge{0, 1});
  CHECK(pattern_conforms(c4_witness().matrix, c4_layout()).ok);
  Matrix tiny = construct_n1_1(2, 0);
  tiny(0, 1) = tiny(1, 0) = 1e-11;
  CHECK_FALSE(pattern_conforms(tiny, Graph::complete(2)).ok);
  CHECK(pattern_conforms(tiny, Graph(2)).ok);
}

TEST_CASE("neg_one_multiplicity examples") {
  CHECK(neg_one_multiplicity(Matrix::identity(5)) == 0);
  CHECK(neg_one_multiplicity(c4_witness().matrix) == 2);
  CHECK(c4_witness().matrix.trace() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(neg_one_multiplicity(diag({-1, -1, 1})) == 2);
  CHECK_THROWS_AS(neg_one_multiplicity(Matrix(2, 1.0)), PreconditionError);
}

TEST_CASE("jacobi_eigenvalues examples") {
  Matrix swap(2);
  swap(0, 1) = swap(1, 0) = 1;
  const auto e = jacobi_eigenvalues(swap);
  CHECK(e[0] == doctest::Approx(-1));
  CHECK(e[1] == doctest::Approx(1));

  const auto j3 = jacobi_eigenvalues(construct_n1_1(3, 0));
  CHECK(j3[0] == doctest::Approx(-1));
  CHECK(j3[1] == doctest::Approx(-1));
  CHECK(j3[2] == doctest::Approx(2));

  const auto w = jacobi_eigenvalues(c4_witness().matrix);
  const std::vector<double> want{-1, -1, 1, 1};
  for (int i = 0; i < 4; ++i) CHECK(w[i] == doctest::Approx(want[i]));

  CHECK(jacobi_eigenvalues(Matrix(0)).empty());
  CHECK(jacobi_eigenvalues(diag({3})) == std::vector<double>{3});
}

TEST_CASE("Jacobi on J - I matches the closed form for n <= 50") {
  for (int n = 1; n <= 50; ++n) {
    const auto e = jacobi_eigenvalues(construct_n1_1(n, 0));
    for (int i = 0; i + 1 < n; ++i) REQUIRE(std::abs(e[i] + 1) <= 1e-9);
    REQUIRE(std::abs(e.back() - (n - 1)) <= 1e-9);
  }
}

TEST_CASE("Jacobi is invariant under permutation similarity") {
  oracle::Rng rng(12);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = rng.uniform(2, 14);
    Matrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m(i, j) = m(j, i) = 4 * rng.unit() - 2;
    const auto perm = oracle::random_permutation(rng, n);
    const auto a = jacobi_eigenvalues(m);
    const auto b = jacobi_eigenvalues(permute(m, perm));
    for (int i = 0; i < n; ++i) REQUIRE(std::abs(a[i] - b[i]) <= 1e-8);
    // Sum and sum of squares against the trace identities.
    double s = 0, s2 = 0;
    for (double x : a) {
      s += x;
      s2 += x * x;
    }
    REQUIRE(s == doctest::Approx(m.trace()).epsilon(1e-10));
    REQUIRE(s2 == doctest::Approx(m.frobenius_norm() * m.frobenius_norm()).epsilon(1e-10));
  }
}

TEST_CASE("trace multiplicity matches the Jacobi count on witnesses") {
  oracle::Rng rng(31);
  for (int rep = 0; rep < 150; ++rep) {
    const int k = rng.uniform(1, 4);
    const int c = k == 1 ? rng.uniform(2, 5) : rng.uniform(0, 5);
    const WitnessPair w = construct_block_form(oracle::random_block_form(rng, k, 5, c));
    int count = 0;
    for (double x : jacobi_eigenvalues(w.matrix)) count += std::abs(x + 1) <= 1e-4;
    REQUIRE(count == neg_one_multiplicity(w.matrix));
  }
}

TEST_CASE("verify_witness examples") {
  const WitnessPair w = c4_witness();
  const VerifyReport ok = verify_witness(w, c4_layout());
  CHECK(ok.pass);
  CHECK(ok.gram_ok == true);
  CHECK(ok.neg_one_multiplicity == 2);
  CHECK(ok.failures.empty());

  // P4 differs from C4 in one pair.
  Graph p4 = c4_layout();
  p4.remove_edge(0, 3);
  const VerifyReport bad = verify_witness(w, p4);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.pattern_ok);
  CHECK_FALSE(bad.failures.empty());

  const WitnessPair swapped = make_witness(w.v, w.u);
  CHECK(verify_witness(swapped, c4_layout()).pass);
}

TEST_CASE("verify rejects perturbed witnesses") {
  const WitnessPair w = c4_witness();
  const Graph g = c4_layout();
  Matrix m = w.matrix;
  m(0, 1) += 1e-3;
  m(1, 0) += 1e-3;
  CHECK_FALSE(verify_matrix(m, g, 2).pattern_ok);
  WitnessPair tampered = w;
  tampered.matrix = m;
  CHECK_FALSE(verify_witness(tampered, g).pass);

  std::vector<double> u = w.u;
  for (double& x : u) x *= 1.01;
  const WitnessPair scaled = make_witness(u, w.v);
  const VerifyReport r = verify_witness(scaled, g);
  CHECK(r.gram_ok == false);
  CHECK_FALSE(r.pass);
}

TEST_CASE("verify_matrix reports wrong order and multiplicity") {
  CHECK_FALSE(verify_matrix(Matrix::identity(3), Graph(4), 0).pass);
  const VerifyReport r = verify_matrix(Matrix::identity(3), Graph(3), 2);
  CHECK_FALSE(r.pass);
  CHECK(r.neg_one_multiplicity == 0);
  CHECK(verify_matrix(Matrix::identity(3), Graph(3), 0).pass);
  Matrix ns = construct_n1_1(2, 0);
  ns(0, 1) = 0.9;
  const VerifyReport nonsym = verify_matrix(ns, Graph::complete(2), 1);
  CHECK_FALSE(nonsym.pass);
}

TEST_CASE("tolerance overrides take effect") {
  Matrix m = construct_n1_1(2, 0);  // eigenvalues +-1
  m(0, 0) = 1e-7;
  Tolerances loose;
  loose.involution = 1e-6;
  CHECK_FALSE(verify_matrix(m, Graph::complete(2), 1).pass);
  CHECK(verify_matrix(m, Graph::complete(2), 1, loose).pass);
}
