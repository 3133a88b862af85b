#include <cmath>

#include "iqs/errors.hpp"
#include "iqs/linalg/matrix.hpp"

namespace iqs::linalg {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> d) {
  DenseMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double DenseMatrix::trace() const noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
  return s;
}

double DenseMatrix::norm() const noexcept {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

bool DenseMatrix::all_finite() const noexcept {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

bool DenseMatrix::is_symmetric(double tol) const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

std::vector<double> DenseMatrix::multiply(std::span<const double> v) const {
  if (v.size() != n_) throw DomainError("DenseMatrix::multiply: size mismatch");
  std::vector<double> out(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    const auto r = row(i);
    for (std::size_t j = 0; j < n_; ++j) s += r[j] * v[j];
    out[i] = s;
  }
  return out;
}

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  const std::size_t n = lhs.size();
  if (rhs.size() != n) throw DomainError("matrix product: size mismatch");
  DenseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto o = out.row(i);
    for (std::size_t k = 0; k < n; ++k) {
      const double lik = lhs(i, k);
      if (lik == 0.0) continue;
      const auto r = rhs.row(k);
      for (std::size_t j = 0; j < n; ++j) o[j] += lik * r[j];
    }
  }
  return out;
}

void TridiagonalSymmetric::validate() const {
  if (diag.empty() ? !offdiag.empty() : offdiag.size() + 1 != diag.size()) {
    throw DomainError("TridiagonalSymmetric: offdiag must have size(diag) - 1 entries");
  }
  for (double v : diag)
    if (!std::isfinite(v)) throw DomainError("TridiagonalSymmetric: non-finite diagonal entry");
  for (double v : offdiag)
    if (!std::isfinite(v)) throw DomainError("TridiagonalSymmetric: non-finite off-diagonal entry");
}

DenseMatrix TridiagonalSymmetric::to_dense() const {
  DenseMatrix m(size());
  for (std::size_t i = 0; i < size(); ++i) m(i, i) = diag[i];
  for (std::size_t i = 0; i + 1 < size(); ++i) {
    m(i, i + 1) = offdiag[i];
    m(i + 1, i) = offdiag[i];
  }
  return m;
}

std::vector<double> TridiagonalSymmetric::multiply(std::span<const double> v) const {
  const std::size_t n = size();
  if (v.size() != n) throw DomainError("TridiagonalSymmetric::multiply: size mismatch");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = diag[i] * v[i];
    if (i > 0) s += offdiag[i - 1] * v[i - 1];
    if (i + 1 < n) s += offdiag[i] * v[i + 1];
    out[i] = s;
  }
  return out;
}

}  // namespace iqs::linalg
