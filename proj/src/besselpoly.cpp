#include "iqs/besselpoly.hpp"

#include <cmath>
#include <string>

#include "iqs/errors.hpp"

namespace iqs {

namespace {

void require_nonzero(double v, const char* what, int n) {
  if (v == 0.0) {
    throw DegenerateParameter(std::string("zero recursion denominator (") + what + ") at n = " + std::to_string(n));
  }
}

}  // namespace

int largest_integer_below(double v) {
  const double c = std::ceil(v);
  return static_cast<int>(c) - 1;
}

BesselFamily::BesselFamily(double mu) : BesselFamily(mu, largest_integer_below(-mu - 0.5)) {}

BesselFamily::BesselFamily(double mu, int n_max) : mu_(mu), n_max_(n_max) {
  if (!std::isfinite(mu)) throw DomainError("BesselFamily: mu must be finite");
  if (n_max < 0) throw DomainError("BesselFamily: mu must be below -1/2 to admit any degree");
  if (!(mu < -n_max - 0.5)) {
    throw DomainError("BesselFamily: need mu < -N - 1/2 (mu = " + std::to_string(mu) +
                      ", N = " + std::to_string(n_max) + ")");
  }
}

std::vector<double> bessel_values(double mu, double x, int count) {
  if (!(x > 0.0)) throw DomainError("bessel polynomial: x must be positive");
  if (count < 1) throw DomainError("bessel polynomial: count must be at least 1");
  std::vector<double> y(static_cast<std::size_t>(count));
  y[0] = 1.0;
  for (int n = 0; n + 1 < count; ++n) {
    const double npm = n + mu;
    const double np1 = n + mu + 1.0;
    const double two = 2.0 * n + 2.0 * mu + 1.0;
    require_nonzero(npm, "n+mu", n);
    require_nonzero(np1, "n+mu+1", n);
    require_nonzero(two, "2n+2mu+1", n);
    require_nonzero(n + 2.0 * mu + 1.0, "n+2mu+1", n);
    const double diag = -mu / (npm * np1);
    const double lower = -n / (npm * two);
    const double upper = (n + 2.0 * mu + 1.0) / (np1 * two);
    const double prev = n > 0 ? y[n - 1] : 0.0;
    y[n + 1] = ((2.0 * x - diag) * y[n] - lower * prev) / upper;
  }
  return y;
}

std::vector<double> bessel_sequence(const BesselFamily& fam, double x) {
  return bessel_values(fam.mu(), x, fam.n_max() + 1);
}

double bessel_norm_squared(const BesselFamily& fam, int n) {
  if (n < 0 || n > fam.n_max()) {
    throw DomainError("bessel_norm: degree " + std::to_string(n) + " outside [0, " + std::to_string(fam.n_max()) + "]");
  }
  const double mu = fam.mu();
  const double numerator = -(2.0 * n + 2.0 * mu + 1.0);
  const double gamma_arg = -n - 2.0 * mu;
  if (!(numerator > 0.0) || !(gamma_arg > 0.0)) {
    throw InvariantViolation("bessel_norm: non-positive radicand for mu = " + std::to_string(mu) +
                             ", n = " + std::to_string(n));
  }
  return std::exp(std::log(numerator) - std::lgamma(n + 1.0) - std::lgamma(gamma_arg));
}

double bessel_norm(const BesselFamily& fam, int n) { return std::sqrt(bessel_norm_squared(fam, n)); }

BPolyParams BPolyParams::from_reduced_energy(int ell, double eps) {
  if (eps == 0.0 || !std::isfinite(eps)) throw DomainError("BPolyParams: reduced energy must be finite and nonzero");
  const double q = (ell + 0.5) * (ell + 0.5);
  return {8.0 / eps, 2.0 * q / eps};
}

std::vector<double> bpoly_sequence(double mu, const BPolyParams& params, int count) {
  if (count < 1) throw DomainError("bpoly_sequence: count must be at least 1");
  std::vector<double> b(static_cast<std::size_t>(count));
  b[0] = 1.0;
  for (int n = 0; n + 1 < count; ++n) {
    const double npm = n + mu;
    const double np1 = n + mu + 1.0;
    const double half = n + mu + 0.5;
    require_nonzero(npm, "n+mu", n);
    require_nonzero(np1, "n+mu+1", n);
    require_nonzero(half, "n+mu+1/2", n);
    require_nonzero(n + 2.0 * mu + 1.0, "n+2mu+1", n);
    const double diag = -2.0 * mu / (npm * np1) + params.gamma * half * half;
    const double lower = -n / (npm * half);
    const double upper = (n + 2.0 * mu + 1.0) / (np1 * half);
    const double prev = n > 0 ? b[n - 1] : 0.0;
    b[n + 1] = ((params.z - diag) * b[n] - lower * prev) / upper;
  }
  return b;
}

}  // namespace iqs
