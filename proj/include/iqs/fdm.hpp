#pragma once

#include "iqs/linalg/matrix.hpp"
#include "iqs/model.hpp"
#include "iqs/spectrum.hpp"

namespace iqs {

/// Uniform grid s_i = i h, h = 1/(M+1), on the compactified interval, with
/// finite-difference stencils of order 2k.
struct FdConfig {
  int m_interior = 1000;
  int half_width = 8;
  double tau_coeff = 0.6;
  double tau_exp = -0.7;
  /// An eigenvalue counts as real when |Im| <= imag_tol |Re| + abs_floor.
  double imag_tol = 1e-8;
  double abs_floor = 1e-10;

  double step() const noexcept { return 1.0 / (m_interior + 1); }
  /// Throws DomainError unless k >= 1 and M >= 2k + 2.
  void validate() const;
};

/// tau_coeff * j^tau_exp for level index j >= 1.
double fd_tau(int j, const FdConfig& cfg);

/// First and second derivative matrices on the interior nodes, Dirichlet
/// boundary columns removed. Rows near the ends use the 2k+1 (first
/// derivative) or 2k+2 (second derivative) nodes closest to the boundary.
linalg::DenseMatrix fd_first_derivative(const FdConfig& cfg);
linalg::DenseMatrix fd_second_derivative(const FdConfig& cfg);

/// A D2 + B D1 with A = -(2 tau^2/pi^2) cos^4(pi s/2), B = (2 tau^2/pi) cos^3 sin.
linalg::DenseMatrix fd_assemble_kinetic(double tau, const FdConfig& cfg);

/// Kinetic part plus the potential on the diagonal.
linalg::DenseMatrix fd_assemble(const PotentialParams& p, double tau, const FdConfig& cfg);

/// Level j (1-based) is the j-th smallest real eigenvalue of J at tau = fd_tau(j).
/// Collection stops at the first level that is missing or non-negative.
/// Diagnostics: tau per level, discarded complex eigenvalues per solve, and a
/// warning when a solve produced fewer real eigenvalues than j.
SpectrumResult fd_spectrum(const PotentialParams& p, const FdConfig& cfg, int max_states, unsigned threads = 1);

/// Exploratory mode: every level from a single solve at a fixed tau. This does
/// not follow the per-level tau schedule and loses accuracy on excited states.
SpectrumResult fd_spectrum_fixed_tau(const PotentialParams& p, double tau, const FdConfig& cfg, int max_states);

}  // namespace iqs
