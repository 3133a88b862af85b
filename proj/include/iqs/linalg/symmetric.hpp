#pragma once

#include <cstddef>
#include <vector>

#include "iqs/linalg/matrix.hpp"

namespace iqs::linalg {

/// Eigen-decomposition of a real symmetric matrix.
///
/// `values` ascend. When vectors were requested, `vectors` holds the leading
/// `vector_rows` components of every eigenvector, row-major: component i of
/// eigenvector k sits at `vectors[i * values.size() + k]`.
struct SymmetricEigen {
  std::vector<double> values;
  std::size_t vector_rows = 0;
  std::vector<double> vectors;

  double component(std::size_t i, std::size_t k) const { return vectors[i * values.size() + k]; }
  /// Full eigenvector k; requires vector_rows == values.size().
  std::vector<double> vector(std::size_t k) const;
};

/// Implicit-shift QL on a symmetric tridiagonal matrix.
///
/// `vector_rows` = 0 computes eigenvalues only; otherwise the first
/// `vector_rows` components of each eigenvector are accumulated. Gauss
/// quadrature needs just the first row, the overlap assembly a few more.
SymmetricEigen symtri_eigen(const TridiagonalSymmetric& t, std::size_t vector_rows = 0);

/// Householder tridiagonalization followed by symtri_eigen; full vectors when requested.
SymmetricEigen symmetric_eigen(const DenseMatrix& a, bool want_vectors = true);

/// Lower Cholesky factor L with A = L L^T. Throws NotPositiveDefinite.
DenseMatrix cholesky(const DenseMatrix& a);

/// Eigenpairs of H v = lambda Omega v with Omega symmetric positive definite.
///
/// Eigenvectors are stored as columns of `vectors` and are Omega-orthonormal.
struct GeneralizedEigen {
  std::vector<double> values;
  DenseMatrix vectors;
};

GeneralizedEigen generalized_sym_eigen(const DenseMatrix& h, const DenseMatrix& omega);
GeneralizedEigen generalized_sym_eigen(const TridiagonalSymmetric& h, const DenseMatrix& omega);
/// Diagonal H, tridiagonal Omega: the TRA form.
GeneralizedEigen generalized_sym_eigen(const std::vector<double>& h_diag, const TridiagonalSymmetric& omega);

}  // namespace iqs::linalg
