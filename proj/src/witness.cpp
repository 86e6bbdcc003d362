#include "invol/witness.hpp"

#include "invol/errors.hpp"

namespace invol {

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

WitnessPair make_witness(std::vector<double> u, std::vector<double> v) {
  if (u.size() != v.size())
    throw PreconditionError("witness vectors differ in length");
  const int n = static_cast<int>(u.size());
  const double scale = dot(u, u);
  if (!(scale > 0.0)) throw PreconditionError("witness vector u is zero");
  Matrix a = Matrix::identity(n);
  const double f = 2.0 / scale;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) -= f * (u[i] * u[j] + v[i] * v[j]);
  return {std::move(u), std::move(v), scale, std::move(a)};
}

WitnessPair scatter(const WitnessPair& w, std::span<const Vertex> labels,
                    int n) {
  if (labels.size() != w.u.size())
    throw PreconditionError("label count does not match witness length");
  std::vector<double> u(n, 0.0), v(n, 0.0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= n)
      throw PreconditionError("witness label out of range");
    u[labels[i]] = w.u[i];
    v[labels[i]] = w.v[i];
  }
  return make_witness(std::move(u), std::move(v));
}

}  // namespace invol
