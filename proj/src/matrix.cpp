#include "invol/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "invol/errors.hpp"

namespace invol {

Matrix::Matrix(int n, double fill) : n_(n) {
  if (n < 0) throw PreconditionError("matrix order must be non-negative");
  data_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
               fill);
}

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double Matrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

double Matrix::asymmetry() const {
  double m = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw PreconditionError("matrix order mismatch");
  const int n = a.n_;
  Matrix c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw PreconditionError("matrix order mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix c = a;
  for (double& x : c.data_) x *= s;
  return c;
}

Matrix permute(const Matrix& a, std::span<const int> perm) {
  const int n = a.order();
  if (static_cast<int>(perm.size()) != n)
    throw PreconditionError("permutation size does not match matrix order");
  Matrix b(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(perm[i], perm[j]) = a(i, j);
  return b;
}

void write_matrix(std::ostream& os, const Matrix& a) {
  const int n = a.order();
  os << n << '\n';
  char buf[32];
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", a(i, j));
      if (j > 0) os << ' ';
      os << buf;
    }
    os << '\n';
  }
}

std::string format_matrix(const Matrix& a) {
  std::ostringstream os;
  write_matrix(os, a);
  return os.str();
}

Matrix parse_matrix(const std::string& text) {
  std::istringstream is(text);
  long long n = -1;
  if (!(is >> n) || n < 0)
    throw ParseError("matrix: missing or invalid order on the first line", 0);
  if (n > 100000) throw ParseError("matrix: order too large", 0);
  Matrix a(static_cast<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string token;
      if (!(is >> token))
        throw ParseError("matrix: expected " + std::to_string(n * n) +
                         " entries");
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size())
        throw ParseError("matrix: invalid number '" + token + "'");
      a(i, j) = value;
    }
  std::string extra;
  if (is >> extra) throw ParseError("matrix: trailing data '" + extra + "'");
  return a;
}

}  // namespace invol
