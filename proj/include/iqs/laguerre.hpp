#pragma once

#include <vector>

#include "iqs/linalg/matrix.hpp"
#include "iqs/model.hpp"
#include "iqs/spectrum.hpp"

namespace iqs {

/// chi_n(r) = C_n y^{alpha} e^{-y/2} L_n^nu(y), y = (lambda r)^{-2},
/// with nu = l + 1/2, alpha = l/2 and C_n = sqrt(2 n! / Gamma(n + nu + 1)).
class LaguerreBasis {
 public:
  LaguerreBasis(int ell, double lambda_scale, int size);

  int ell() const noexcept { return ell_; }
  double lambda_scale() const noexcept { return lambda_; }
  int size() const noexcept { return size_; }
  double nu() const noexcept { return ell_ + 0.5; }
  double alpha_exp() const noexcept { return 0.5 * ell_; }

 private:
  int ell_;
  double lambda_;
  int size_;
};

/// 3 * size, and at least 300 for l = 0 where the overlap integral is singular.
int default_quad_order(const LaguerreBasis& basis);

linalg::TridiagonalSymmetric lag_hamiltonian(const PotentialParams& p, const LaguerreBasis& basis);

/// Omega_nm = sum_k w_k Lhat_n(y_k) Lhat_m(y_k) / y_k^2 over a Gauss rule with
/// weight y^nu e^{-y}; Lhat are the orthonormal Laguerre polynomials. The 1/y^2
/// factor keeps the integrand non-polynomial, so the result depends on quad_order.
/// At l = 0 the exact integral diverges and the quadrature acts as a regularization.
///
/// Requires quad_order >= size. Throws NotPositiveDefinite when the result is
/// not positive definite.
linalg::DenseMatrix lag_overlap(const LaguerreBasis& basis, int quad_order);

/// quad_order = 0 selects default_quad_order.
SpectrumResult lag_spectrum(const PotentialParams& p, const LaguerreBasis& basis, int quad_order = 0);

struct PlateauOptions {
  int steps = 40;
  /// Neighbouring samples are stable when every level moves by less than
  /// rel_tol times the magnitude of the deepest level.
  double rel_tol = 1e-6;
  int quad_order = 0;
  unsigned threads = 1;
};

struct PlateauResult {
  double lambda_star;
  double window_low;
  double window_high;
  /// Number of lambda samples inside the window.
  int width;
  std::vector<double> lambdas;
  SpectrumResult spectrum;
};

/// Scans lambda geometrically over [low, high] and returns the widest run of
/// samples whose spectra agree, its geometric midpoint, and the spectrum there.
/// Throws NoPlateau when no run of at least 3 samples exists.
PlateauResult lag_plateau(const PotentialParams& p, int size, double low, double high,
                          const PlateauOptions& opts = {});

}  // namespace iqs
