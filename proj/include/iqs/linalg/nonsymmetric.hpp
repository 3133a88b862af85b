#pragma once

#include <complex>
#include <vector>

#include "iqs/linalg/matrix.hpp"

namespace iqs::linalg {

/// All eigenvalues of a real square matrix.
///
/// Balancing, Householder reduction to upper Hessenberg form and the Francis
/// double-shift QR iteration. Eigenvalues are returned sorted by real part,
/// then imaginary part. Throws NumericalFailure if an eigenvalue fails to
/// converge.
std::vector<std::complex<double>> dense_eigen(const DenseMatrix& m);

/// Eigenvector for a real eigenvalue by inverse iteration, normalized to unit
/// 2-norm with its largest component positive.
std::vector<double> real_eigenvector(const DenseMatrix& m, double eigenvalue);

}  // namespace iqs::linalg
