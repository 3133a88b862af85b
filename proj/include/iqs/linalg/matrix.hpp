#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace iqs::linalg {

/// Square real matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const double> d);

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  std::span<double> row(std::size_t i) noexcept { return {data_.data() + i * n_, n_}; }
  std::span<const double> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }

  std::span<const double> data() const noexcept { return data_; }

  DenseMatrix transposed() const;
  double trace() const noexcept;
  /// Frobenius norm.
  double norm() const noexcept;
  bool all_finite() const noexcept;
  bool is_symmetric(double tol = 0.0) const noexcept;

  std::vector<double> multiply(std::span<const double> v) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs);

/// Symmetric tridiagonal matrix: diag has n entries, offdiag n-1.
struct TridiagonalSymmetric {
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t size() const noexcept { return diag.size(); }
  /// Throws DomainError when lengths disagree or entries are not finite.
  void validate() const;
  DenseMatrix to_dense() const;
  std::vector<double> multiply(std::span<const double> v) const;
};

}  // namespace iqs::linalg
