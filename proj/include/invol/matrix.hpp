#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace invol {

/// Dense square matrix of doubles, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n, double fill = 0.0);

  static Matrix identity(int n);

  int order() const noexcept { return n_; }

  double& operator()(int i, int j) { return data_[index(i, j)]; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }

  std::span<const double> row(int i) const {
    return {data_.data() + index(i, 0), static_cast<std::size_t>(n_)};
  }

  double trace() const;
  double max_abs() const;
  double frobenius_norm() const;
  /// Largest |a_ij - a_ji|.
  double asymmetry() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(double s, const Matrix& a);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<double> data_;
};

/// P^T A P for the permutation taking row i to perm[i].
Matrix permute(const Matrix& a, std::span<const int> perm);

/// Text format: a line with n, then n rows of n space-separated values
/// printed with 17 significant digits.
std::string format_matrix(const Matrix& a);
void write_matrix(std::ostream& os, const Matrix& a);
/// Throws ParseError.
Matrix parse_matrix(const std::string& text);

}  // namespace invol
