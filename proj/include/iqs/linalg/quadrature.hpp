#pragma once

#include <cstddef>
#include <vector>

namespace iqs::linalg {

/// Gauss rule for the weight y^alpha e^{-y} on (0, inf).
///
/// Nodes increase strictly. Weights are non-negative; for large orders the
/// weights of the outermost nodes underflow to zero in double precision.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double alpha = 0.0;
};

/// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of the Laguerre
/// recurrence, weights Gamma(alpha+1) times the squared first eigenvector components.
QuadratureRule gauss_laguerre(double alpha, int order);

/// Gauss-Laguerre rule together with the weighted samples
///
///   sqrt(w_k) * Lhat_n(y_k),  Lhat_n = sqrt(n! / Gamma(n+alpha+1)) L_n^alpha,
///
/// for n < rows, taken from the Jacobi eigenvectors rather than from the
/// polynomial recurrence so that nothing overflows at large nodes.
/// Entry (n, k) sits at samples[n * order + k].
struct LaguerreSamples {
  QuadratureRule rule;
  std::size_t rows = 0;
  std::vector<double> samples;

  double operator()(std::size_t n, std::size_t k) const { return samples[n * rule.nodes.size() + k]; }
};

LaguerreSamples gauss_laguerre_samples(double alpha, int order, int rows);

}  // namespace iqs::linalg
