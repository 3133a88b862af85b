#pragma once

#include <span>
#include <vector>

#include "iqs/linalg/matrix.hpp"
#include "iqs/model.hpp"
#include "iqs/spectrum.hpp"

namespace iqs {

/// Bessel-polynomial basis that makes the wave operator tridiagonal.
///
/// mu = -(b/a)^2 / 2 removes the 1/x term from the action of the wave
/// operator. `capacity` is the largest possible bound-state count,
/// floor((b/a)^2/2 + 1/2), lowered by one when mu = -N - 1/2 exactly.
///
/// Basis element n behaves like x^{mu + 3/4 + n} at large x and is square
/// integrable only for n < -mu - 1. When the fractional part of -mu is at
/// least 1/2 the top degree allowed by the polynomial family fails this, so
/// `dimension` (the number of elements actually assembled) is capacity - 1.
struct TraBasis {
  double mu;
  int capacity;
  int dimension;
  double a;
  int ell;

  double alpha() const noexcept { return mu + 0.75; }
};

TraBasis tra_basis(const PotentialParams& p);

/// H is diagonal and Omega tridiagonal in the Bessel basis.
struct TraSystem {
  TraBasis basis;
  std::vector<double> h_diag;
  linalg::TridiagonalSymmetric omega;
};

TraSystem tra_assemble(const PotentialParams& p);

/// Negative generalized eigenvalues of (H, Omega), ascending.
///
/// Diagnostics: every eigenvalue, basis sizes, and for each bound state the
/// first coefficient polynomial past the basis, B_dim(z; gamma), relative to
/// the largest |B_n|; it vanishes at exact eigenvalues.
SpectrumResult tra_spectrum(const PotentialParams& p);

/// c_n = A_n^2 B_n^mu(z; gamma) for n < dimension. Throws DomainError for energy >= 0.
std::vector<double> tra_coefficients(const PotentialParams& p, double energy);

struct WavefunctionTable {
  int ell;
  double energy;
  std::vector<double> r;
  std::vector<double> psi;
};

enum class WavefunctionScale { Unnormalized, UnitNorm };

/// psi(r) = f0 (r/a)^{2 mu + 3/2} e^{-a^2 / 2r^2} sum_n c_n Y_n^mu(r^2/a^2).
///
/// f0 = 1 by default. UnitNorm picks f0 > 0 so that the integral of psi^2 dr
/// is 1, using the closed-form Gram matrix of the basis.
WavefunctionTable tra_wavefunction(const PotentialParams& p, double energy, std::span<const double> r_grid,
                                   WavefunctionScale scale = WavefunctionScale::Unnormalized);

/// Integral of psi^2 dr for f0 = 1.
double tra_norm_squared(const PotentialParams& p, double energy);

struct NodeCount {
  int sign_changes;
  int significant_nodes;
};

/// Sign changes of psi on the sampled grid. `significant_nodes` ignores lobes
/// whose peak is below `lobe_fraction` of max |psi|: the truncated series decays
/// only algebraically, so its tail carries a few low-amplitude sign flips.
NodeCount count_nodes(std::span<const double> psi, double lobe_fraction = 0.15);

}  // namespace iqs
