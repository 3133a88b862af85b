#include "iqs/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "iqs/errors.hpp"

namespace iqs {

PotentialParams::PotentialParams(double a, double b, int ell, double lambda_cap)
    : a_(a), b_(b), ell_(ell), lambda_cap_(lambda_cap) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(lambda_cap)) {
    throw DomainError("potential parameters must be finite");
  }
  if (a <= 0.0) throw DomainError("a must be positive, got " + std::to_string(a));
  if (std::abs(b) <= std::abs(a)) {
    throw UnsupportedRegime("|b| must exceed |a| (a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
  }
  if (ell < 0) throw DomainError("angular momentum must be non-negative");
}

PotentialParams PotentialParams::scaled(double sigma) const {
  if (!(sigma > 0.0)) throw DomainError("scale factor must be positive");
  return PotentialParams(a_ * sigma, b_ * sigma, ell_, lambda_cap_);
}

PotentialParams PotentialParams::with_ell(int ell) const { return PotentialParams(a_, b_, ell, lambda_cap_); }

double potential_value(const PotentialParams& p, double r) {
  if (!(r > 0.0)) throw DomainError("potential_value: r must be positive");
  const double inv2 = 1.0 / (r * r);
  const double centrifugal = p.ell() * (p.ell() + 1.0) + p.lambda_cap();
  const double a2 = p.a() * p.a();
  return inv2 * (0.5 * centrifugal + inv2 * (-p.b() * p.b() + 0.5 * a2 * a2 * inv2));
}

double mapped_potential_value(const PotentialParams& p, double tau, double s) {
  if (!(tau > 0.0)) throw DomainError("mapped_potential_value: tau must be positive");
  if (!(s > 0.0 && s < 1.0)) throw DomainError("mapped_potential_value: s must lie in (0, 1)");
  const double t = std::tan(0.5 * std::numbers::pi * s);
  const double inv2 = 1.0 / (t * t);
  const double bt = p.b() * tau;
  const double at2 = (p.a() * tau) * (p.a() * tau);
  const double centrifugal = p.ell() * (p.ell() + 1.0) + p.lambda_cap();
  return 0.5 * tau * tau * inv2 * (centrifugal - 2.0 * bt * bt * inv2 + at2 * at2 * inv2 * inv2);
}

double radius_from_mapped(double tau, double s) {
  if (!(tau > 0.0)) throw DomainError("radius_from_mapped: tau must be positive");
  if (!(s > 0.0 && s < 1.0)) throw DomainError("radius_from_mapped: s must lie in (0, 1)");
  return std::tan(0.5 * std::numbers::pi * s) / tau;
}

void require_zero_lambda(const PotentialParams& p, std::string_view solver) {
  if (p.lambda_cap() != 0.0) {
    throw UnsupportedParameter(std::string(solver) + " assumes Lambda = 0; got Lambda = " +
                               std::to_string(p.lambda_cap()));
  }
}

}  // namespace iqs
