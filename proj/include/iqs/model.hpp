#pragma once

#include <string_view>

namespace iqs {

/// Physical inputs of the radial problem
///
///   V(r) = [l(l+1) + Lambda] / (2 r^2) - b^2 / r^4 + a^4 / (2 r^6)
///
/// in atomic units (hbar = m = 1). Construction enforces a > 0 and |b| > |a|.
class PotentialParams {
 public:
  PotentialParams(double a, double b, int ell, double lambda_cap = 0.0);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  int ell() const noexcept { return ell_; }
  double lambda_cap() const noexcept { return lambda_cap_; }

  /// (b/a)^2, the single dimensionless strength that fixes the TRA basis.
  double strength() const noexcept { return (b_ / a_) * (b_ / a_); }

  /// Same potential with both lengths multiplied by sigma.
  PotentialParams scaled(double sigma) const;
  PotentialParams with_ell(int ell) const;

 private:
  double a_;
  double b_;
  int ell_;
  double lambda_cap_;
};

/// V(r). Throws DomainError for r <= 0.
double potential_value(const PotentialParams& p, double r);

/// V expressed in the compactified coordinate s = (2/pi) atan(tau r), s in (0, 1).
double mapped_potential_value(const PotentialParams& p, double tau, double s);

/// r = tan(pi s / 2) / tau, inverse of the compactification map.
double radius_from_mapped(double tau, double s);

/// epsilon = a^2 E.
inline double reduced_energy(const PotentialParams& p, double energy) { return p.a() * p.a() * energy; }

/// x = (r/a)^2.
inline double tra_variable(const PotentialParams& p, double r) { return (r / p.a()) * (r / p.a()); }

/// The three solvers are derived for Lambda = 0; throws UnsupportedParameter otherwise.
void require_zero_lambda(const PotentialParams& p, std::string_view solver);

}  // namespace iqs
