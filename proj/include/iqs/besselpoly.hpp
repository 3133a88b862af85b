#pragma once

#include <vector>

namespace iqs {

/// Finite family of Bessel polynomials Y_n^mu(x), n = 0..N, orthogonal on
/// (0, inf) with weight x^{2 mu} e^{-1/x}. Valid only while mu < -N - 1/2.
class BesselFamily {
 public:
  /// Largest admissible family for this mu: N is the largest integer strictly below -mu - 1/2.
  explicit BesselFamily(double mu);
  /// Explicit degree bound; throws DomainError unless mu < -n_max - 1/2.
  BesselFamily(double mu, int n_max);

  double mu() const noexcept { return mu_; }
  int n_max() const noexcept { return n_max_; }

 private:
  double mu_;
  int n_max_;
};

/// Largest integer strictly less than v.
int largest_integer_below(double v);

/// [Y_0(x), ..., Y_N(x)] by upward three-term recursion. Throws DomainError for x <= 0.
std::vector<double> bessel_sequence(const BesselFamily& fam, double x);

/// [Y_0(x), ..., Y_{count-1}(x)] for any mu with nonvanishing recursion
/// denominators; used to reach one degree past the orthogonal range.
std::vector<double> bessel_values(double mu, double x, int count);

/// A_n = sqrt(-(2n+2mu+1) / (n! Gamma(-n-2mu))), evaluated through log-gamma.
double bessel_norm(const BesselFamily& fam, int n);
/// A_n^2, without the square root round trip.
double bessel_norm_squared(const BesselFamily& fam, int n);

/// Parameters of the coefficient polynomial B_n^mu(z; gamma).
struct BPolyParams {
  double gamma;
  double z;

  /// gamma = 8/eps, z = (2/eps)(l + 1/2)^2 with eps = a^2 E. Throws DomainError for eps = 0.
  static BPolyParams from_reduced_energy(int ell, double eps);
};

/// [B_0, ..., B_{count-1}] from B_0 = 1, B_{-1} = 0 and the three-term recursion
/// solved for B_{n+1}. Throws DegenerateParameter on a zero denominator.
std::vector<double> bpoly_sequence(double mu, const BPolyParams& params, int count);

}  // namespace iqs
