#include <cmath>
#include <string>

#include "iqs/errors.hpp"
#include "iqs/linalg/quadrature.hpp"
#include "iqs/linalg/symmetric.hpp"

namespace iqs::linalg {

namespace {

TridiagonalSymmetric laguerre_jacobi(double alpha, int order) {
  if (!(alpha > -1.0)) throw DomainError("gauss_laguerre: alpha must exceed -1");
  if (order < 1) throw DomainError("gauss_laguerre: order must be at least 1");
  TridiagonalSymmetric j;
  j.diag.resize(static_cast<std::size_t>(order));
  j.offdiag.resize(static_cast<std::size_t>(order - 1));
  for (int k = 0; k < order; ++k) j.diag[k] = 2.0 * k + alpha + 1.0;
  for (int k = 0; k + 1 < order; ++k) j.offdiag[k] = std::sqrt((k + 1.0) * (k + alpha + 1.0));
  return j;
}

}  // namespace

QuadratureRule gauss_laguerre(double alpha, int order) {
  return gauss_laguerre_samples(alpha, order, 1).rule;
}

LaguerreSamples gauss_laguerre_samples(double alpha, int order, int rows) {
  const TridiagonalSymmetric jac = laguerre_jacobi(alpha, order);
  if (rows < 1 || rows > order) {
    throw DomainError("gauss_laguerre_samples: rows must lie in [1, order], got " + std::to_string(rows));
  }
  const SymmetricEigen eig = symtri_eigen(jac, static_cast<std::size_t>(rows));
  const std::size_t q = static_cast<std::size_t>(order);
  const std::size_t nrows = static_cast<std::size_t>(rows);
  const double mu0 = std::tgamma(alpha + 1.0);

  LaguerreSamples out;
  out.rule.alpha = alpha;
  out.rule.nodes = eig.values;
  out.rule.weights.resize(q);
  out.rows = nrows;
  out.samples.resize(nrows * q);
  for (std::size_t k = 0; k < q; ++k) {
    // fix the eigenvector sign so that the constant polynomial is positive
    const double sgn = eig.component(0, k) < 0 ? -1.0 : 1.0;
    const double v0 = eig.component(0, k);
    out.rule.weights[k] = mu0 * v0 * v0;
    for (std::size_t n = 0; n < nrows; ++n) {
      // Jacobi eigenvectors carry orthonormal polynomials with positive leading
      // coefficient; L_n has sign (-1)^n.
      const double parity = (n % 2 == 0) ? 1.0 : -1.0;
      out.samples[n * q + k] = parity * sgn * eig.component(n, k);
    }
  }
  return out;
}

}  // namespace iqs::linalg
