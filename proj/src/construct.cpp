#include "invol/construct.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "invol/errors.hpp"

namespace invol {

WeightSet select_weights(int k, std::span<const double> forbidden) {
  if (k < 0) throw PreconditionError("weight count must be non-negative");
  WeightSet ws;
  ws.forbidden.assign(forbidden.begin(), forbidden.end());
  for (double cand = 4.0; static_cast<int>(ws.w.size()) < k; cand += 1.0) {
    bool blocked = false;
    for (double f : forbidden)
      if (std::abs(cand - f) <= kWeightExclusion) blocked = true;
    if (!blocked) ws.w.push_back(cand);
  }
  return ws;
}

VectorPair block_vectors(int a, int b, double w) {
  if (a < 1 || a > b) throw PreconditionError("block requires 1 <= a <= b");
  if (w == 0.0) throw PreconditionError("block weight must be nonzero");
  const double s = std::sqrt(static_cast<double>(a) / b);
  VectorPair p;
  p.u.assign(a, 1.0);
  p.v.assign(a, w);
  p.u.insert(p.u.end(), b, -s * w);
  p.v.insert(p.v.end(), b, s);
  return p;
}

double clique_parameter(int c) { return c == 4 ? 2.0 : 1.0; }

VectorPair clique_vectors(int c, double t) {
  if (c < 3)
    throw PreconditionError(
        "clique_vectors needs c >= 3: two rows cannot balance on their own");
  if (!(t > 0.0)) throw PreconditionError("clique parameter t must be > 0");
  const double h = (c - 2) / 2.0;
  if (std::abs(t * t - h) <= 1e-12 * std::max(1.0, h))
    throw PreconditionError("t^2 = (c-2)/2 gives a zero inside K_c");
  VectorPair p;
  p.u.assign(c, 1.0);
  p.v.assign(c, 1.0);
  p.u.front() = -t;
  p.v.front() = h / t;
  p.u.back() = -h / t;
  p.v.back() = t;
  return p;
}

std::vector<double> clique_forbidden_weights(int c, double t) {
  const double h = (c - 2) / 2.0;
  // Block rows (1, w) and (-w, 1) against the clique rows (-t, h/t), (1, 1)
  // and (-h/t, t) vanish exactly at w in {t^2/h, h/t^2, 1}. The other four
  // values are excluded as well.
  return {1.0, t * t / h, h / (t * t), t, 1.0 / t, h / t, t / h};
}

OneOneSolution solve_oneone(int a, int b, int c, int d) {
  if (a < 1 || a > b || c < 1 || c > d)
    throw PreconditionError("solve_oneone requires 1 <= a <= b, 1 <= c <= d");
  OneOneSolution s;
  s.coef_a = 3.0 * a - 12.0 * b + 32.0 * c - 72.0 * d;
  s.coef_b = -2.0 * a + 8.0 * b - 12.0 * c + 27.0 * d;
  const double disc =
      std::sqrt(s.coef_a * s.coef_a + 4.0 * s.coef_b * s.coef_b);
  // Positive root of s^2 + A s - B^2, in the cancellation-free branch.
  s.r = s.coef_a <= 0.0 ? (-s.coef_a + disc) / 2.0
                        : 2.0 * s.coef_b * s.coef_b / (s.coef_a + disc);
  if (!(2.0 * s.coef_b < s.r && s.r < 3.0 * s.coef_b))
    throw std::logic_error("oneone: root " + std::to_string(s.r) +
                           " outside (2B, 3B)");
  s.y = std::sqrt(s.r);
  s.x = s.coef_b / s.y;
  return s;
}

namespace {

void append(VectorPair& into, const VectorPair& part) {
  into.u.insert(into.u.end(), part.u.begin(), part.u.end());
  into.v.insert(into.v.end(), part.v.begin(), part.v.end());
}

void require_canonical(const BlockForm& bf) {
  if (!bf.is_canonical())
    throw PreconditionError("block form is not canonical: " + to_dsl(bf));
}

WitnessPair finish(VectorPair p) {
  return make_witness(std::move(p.u), std::move(p.v));
}

}  // namespace

WitnessPair construct_join_blocks(const BlockForm& bf) {
  require_canonical(bf);
  if (bf.clique_size != 0)
    throw PreconditionError("construct_join_blocks requires c = 0");
  if (bf.block_count() < 2)
    throw NotConstructible("a join of blocks needs k > 1");
  const auto ws = select_weights(bf.block_count(), {});
  VectorPair all;
  for (int i = 0; i < bf.block_count(); ++i)
    append(all, block_vectors(bf.blocks[i].a, bf.blocks[i].b, ws.w[i]));
  return finish(std::move(all));
}

namespace {

// K_2 joined to blocks. Two rows on K_2 cannot balance themselves, so block 1
// is deliberately unbalanced and the K_2 rows cancel the excess. In complex
// form z = u_i + i v_i, balance is sum z^2 = 0. Block 1 rows are zeta on K_a
// and i m zeta on K_b with m^2 = 2a/b, summing to -a zeta^2; the K_2 rows
// sqrt(a) zeta e^{+-i pi/6} sum to a zeta^2.
WitnessPair construct_with_k2(const BlockForm& bf) {
  const double w1 = select_weights(1, {}).w.front();
  const double theta = std::atan(w1);
  const double third = std::numbers::pi / 3.0;
  // Rows of other blocks perpendicular to a K_2 row sit at angle
  // theta +- 60 degrees (mod 180).
  const double forbidden[] = {w1, std::tan(theta + third),
                              std::tan(theta - third)};
  const auto rest = select_weights(bf.block_count() - 1, forbidden);

  const int a1 = bf.blocks[0].a;
  const int b1 = bf.blocks[0].b;
  const double m = std::sqrt(2.0 * a1 / b1);
  VectorPair all;
  all.u.assign(a1, 1.0);
  all.v.assign(a1, w1);
  all.u.insert(all.u.end(), b1, -m * w1);
  all.v.insert(all.v.end(), b1, m);
  for (int i = 1; i < bf.block_count(); ++i)
    append(all, block_vectors(bf.blocks[i].a, bf.blocks[i].b, rest.w[i - 1]));

  const double rho = std::sqrt(static_cast<double>(a1));
  for (double phi : {std::numbers::pi / 6.0, -std::numbers::pi / 6.0}) {
    all.u.push_back(rho * (std::cos(phi) - w1 * std::sin(phi)));
    all.v.push_back(rho * (std::sin(phi) + w1 * std::cos(phi)));
  }
  return finish(std::move(all));
}

}  // namespace

WitnessPair construct_with_clique(const BlockForm& bf) {
  require_canonical(bf);
  const int c = bf.clique_size;
  if (c == 0)
    throw PreconditionError("c = 0: use construct_join_blocks");
  if (c == 1) throw PreconditionError("c = 1: use construct_with_k1");
  if (bf.block_count() < 1)
    throw NotConstructible("complete graph: minimal bipartition is [n-1,1]");
  if (c == 2) return construct_with_k2(bf);

  const double t = clique_parameter(c);
  const auto forbidden = clique_forbidden_weights(c, t);
  const auto ws = select_weights(bf.block_count(), forbidden);
  VectorPair all;
  for (int i = 0; i < bf.block_count(); ++i)
    append(all, block_vectors(bf.blocks[i].a, bf.blocks[i].b, ws.w[i]));
  append(all, clique_vectors(c, t));
  return finish(std::move(all));
}

namespace {

// Rows (1,2)/(4,-2) on the first block and (2,6)/(9,-3) on the second.
VectorPair oneone_blocks(int a, int b, int c, int d) {
  VectorPair p;
  p.u.assign(a, 1.0);
  p.v.assign(a, 2.0);
  p.u.insert(p.u.end(), b, 4.0);
  p.v.insert(p.v.end(), b, -2.0);
  p.u.insert(p.u.end(), c, 2.0);
  p.v.insert(p.v.end(), c, 6.0);
  p.u.insert(p.u.end(), d, 9.0);
  p.v.insert(p.v.end(), d, -3.0);
  return p;
}

}  // namespace

WitnessPair construct_oneone(int a, int b, int c, int d) {
  const OneOneSolution s = solve_oneone(a, b, c, d);
  VectorPair p = oneone_blocks(a, b, c, d);
  p.u.push_back(s.x);
  p.v.push_back(s.y);
  return finish(std::move(p));
}

WitnessPair construct_with_k1(const BlockForm& bf) {
  require_canonical(bf);
  if (bf.clique_size != 1)
    throw PreconditionError("construct_with_k1 requires c = 1");
  if (bf.block_count() < 2)
    throw NotConstructible(
        "(K_a ∪ K_b) ∇ K_1 has a unique path with two edges, so q >= 3");
  const Block& first = bf.blocks[0];
  const Block& second = bf.blocks[1];
  const OneOneSolution s = solve_oneone(first.a, first.b, second.a, second.b);
  const double forbidden[] = {2.0, 3.0, 0.5, 1.0 / 3.0, s.x / s.y, s.y / s.x};
  const auto ws = select_weights(bf.block_count() - 2, forbidden);

  VectorPair all = oneone_blocks(first.a, first.b, second.a, second.b);
  for (int i = 2; i < bf.block_count(); ++i)
    append(all, block_vectors(bf.blocks[i].a, bf.blocks[i].b, ws.w[i - 2]));
  all.u.push_back(s.x);
  all.v.push_back(s.y);
  return finish(std::move(all));
}

WitnessPair construct_block_form(const BlockForm& bf) {
  require_canonical(bf);
  if (bf.block_count() == 0)
    throw NotConstructible("complete graph: minimal bipartition is [n-1,1]");
  switch (bf.clique_size) {
    case 0:
      return construct_join_blocks(bf);
    case 1:
      return construct_with_k1(bf);
    default:
      return construct_with_clique(bf);
  }
}

Matrix construct_n1_1(int clique, int isolated) {
  if (clique < 0 || isolated < 0 || clique + isolated < 1)
    throw PreconditionError("construct_n1_1 needs at least one vertex");
  const int n = clique + isolated;
  Matrix a(n);
  for (int i = 0; i < clique; ++i)
    for (int j = 0; j < clique; ++j)
      if (i != j) a(i, j) = 1.0;
  for (int i = clique; i < n; ++i) a(i, i) = -1.0;
  return a;
}

Matrix shift_scale(const Matrix& b, double lambda1, double lambda2) {
  if (lambda1 == lambda2)
    throw PreconditionError("shift_scale needs two distinct eigenvalues");
  const double gap = lambda1 - lambda2;
  Matrix a = (2.0 / gap) * b;
  const double shift = (lambda1 + lambda2) / gap;
  for (int i = 0; i < a.order(); ++i) a(i, i) -= shift;
  return a;
}

namespace {

// Clique block with spectrum {1, (-1)^(m-1)}.
Matrix unit_clique(int m) {
  if (m == 1) return Matrix::identity(1);
  return shift_scale(construct_n1_1(m, 0), m - 1.0, -1.0);
}

void place(Matrix& into, const Matrix& block, int offset) {
  for (int i = 0; i < block.order(); ++i)
    for (int j = 0; j < block.order(); ++j)
      into(offset + i, offset + j) = block(i, j);
}

}  // namespace

Matrix construct_two_cliques(int a, int b, int isolated) {
  if (a < 1 || b < 1 || isolated < 0)
    throw PreconditionError("construct_two_cliques requires a, b >= 1");
  const int n = a + b + isolated;
  Matrix m(n);
  place(m, unit_clique(a), 0);
  place(m, unit_clique(b), a);
  for (int i = a + b; i < n; ++i) m(i, i) = -1.0;
  return m;
}

namespace {

std::vector<int> concat(std::initializer_list<const std::vector<Vertex>*> parts) {
  std::vector<int> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

Construction rank_two(const Graph& g, const BlockCertificate& bc) {
  const std::vector<Vertex> order = bc.partition.vertex_order();
  const WitnessPair local = construct_block_form(bc.partition.shape());
  Construction c;
  c.kind = ConstructionKind::RankTwo;
  c.witness = scatter(local, order, g.order());
  c.matrix = c.witness->matrix;
  c.expected_neg_one_multiplicity = 2;
  return c;
}

}  // namespace

Construction construct_disconnected(const Graph& g, const Classification& cls) {
  if (cls.verdict != Verdict::MinimalN2_2 || is_connected(g))
    throw NotConstructible(
        "construct_disconnected needs a disconnected MINIMAL_N2_2 graph");
  if (const auto* tc = std::get_if<TwoCliques>(&cls.certificate)) {
    const Matrix local =
        construct_two_cliques(static_cast<int>(tc->first.size()),
                              static_cast<int>(tc->second.size()),
                              static_cast<int>(tc->isolated.size()));
    Construction c;
    c.kind = ConstructionKind::TwoCliques;
    c.matrix = permute(local, concat({&tc->first, &tc->second, &tc->isolated}));
    c.expected_neg_one_multiplicity = g.order() - 2;
    return c;
  }
  if (const auto* bc = std::get_if<BlockCertificate>(&cls.certificate))
    return rank_two(g, *bc);
  throw NotConstructible("certificate does not describe a [n-2,2] shape");
}

Construction construct(const Graph& g, const Classification& cls) {
  switch (cls.verdict) {
    case Verdict::MinimalN2_2:
      if (!is_connected(g)) return construct_disconnected(g, cls);
      return rank_two(g, std::get<BlockCertificate>(cls.certificate));
    case Verdict::CompletePlusIsolated: {
      const auto& split = std::get<IsolatedSplit>(cls.certificate);
      const int m = static_cast<int>(split.clique.size());
      const Matrix raw = permute(
          construct_n1_1(m, static_cast<int>(split.isolated.size())),
          concat({&split.clique, &split.isolated}));
      Construction c;
      c.kind = ConstructionKind::CompletePlusIsolated;
      c.matrix = shift_scale(raw, m - 1.0, -1.0);
      c.adjacency_form = raw;
      c.expected_neg_one_multiplicity = g.order() - 1;
      return c;
    }
    default:
      throw NotConstructible(std::string("no witness for verdict ") +
                             std::string(to_string(cls.verdict)));
  }
}

VerifyReport verify_construction(const Construction& c, const Graph& g,
                                 const Tolerances& tol) {
  if (c.witness) return verify_witness(*c.witness, g, tol);
  return verify_matrix(c.matrix, g, c.expected_neg_one_multiplicity, tol);
}

}  // namespace invol
