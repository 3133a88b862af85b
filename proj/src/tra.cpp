#include "iqs/tra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "iqs/besselpoly.hpp"
#include "iqs/errors.hpp"
#include "iqs/linalg/symmetric.hpp"

namespace iqs {

namespace {

constexpr double kMarginalEnergy = 1e-12;

// v_n = A_n B_n: expansion of psi in the normalized basis with f0 = 1.
std::vector<double> basis_components(const TraBasis& basis, const std::vector<double>& coeffs) {
  const BesselFamily fam(basis.mu, basis.dimension - 1);
  std::vector<double> v(coeffs.size());
  for (std::size_t n = 0; n < coeffs.size(); ++n) v[n] = coeffs[n] / bessel_norm(fam, static_cast<int>(n));
  return v;
}

}  // namespace

TraBasis tra_basis(const PotentialParams& p) {
  require_zero_lambda(p, "tra");
  TraBasis basis{};
  basis.mu = -0.5 * p.strength();
  basis.capacity = largest_integer_below(-basis.mu - 0.5) + 1;
  basis.dimension = std::clamp(largest_integer_below(-basis.mu - 1.0) + 1, 0, basis.capacity);
  basis.a = p.a();
  basis.ell = p.ell();
  return basis;
}

TraSystem tra_assemble(const PotentialParams& p) {
  TraSystem sys{tra_basis(p), {}, {}};
  const double mu = sys.basis.mu;
  const int dim = sys.basis.dimension;
  const double q = (p.ell() + 0.5) * (p.ell() + 0.5);
  const double scale = 1.0 / (4.0 * p.a() * p.a());

  sys.h_diag.resize(static_cast<std::size_t>(dim));
  sys.omega.diag.resize(static_cast<std::size_t>(dim));
  sys.omega.offdiag.resize(static_cast<std::size_t>(std::max(dim - 1, 0)));
  for (int n = 0; n < dim; ++n) {
    const double two = 2.0 * n + 2.0 * mu + 1.0;
    sys.h_diag[n] = scale * (q - two * two);
    sys.omega.diag[n] = 0.25 * (-mu / ((n + mu) * (n + mu + 1.0)));
  }
  for (int n = 0; n + 1 < dim; ++n) {
    const double radicand =
        -(n + 1.0) * (n + 2.0 * mu + 1.0) / ((2.0 * n + 2.0 * mu + 1.0) * (2.0 * n + 2.0 * mu + 3.0));
    if (!(radicand > 0.0)) {
      throw InvariantViolation("tra_assemble: non-positive overlap radicand at n = " + std::to_string(n));
    }
    sys.omega.offdiag[n] = 0.25 * std::sqrt(radicand) / (n + mu + 1.0);
  }
  return sys;
}

SpectrumResult tra_spectrum(const PotentialParams& p) {
  const TraSystem sys = tra_assemble(p);
  SpectrumResult out{Method::Tra, p, {}, {}};
  out.diagnostics["mu"] = sys.basis.mu;
  out.diagnostics["capacity"] = static_cast<long long>(sys.basis.capacity);
  out.diagnostics["dimension"] = static_cast<long long>(sys.basis.dimension);
  if (sys.basis.dimension == 0) {
    out.diagnostics["all_eigenvalues"] = std::vector<double>{};
    return out;
  }

  const auto eig = linalg::generalized_sym_eigen(sys.h_diag, sys.omega);
  long long marginal = 0;
  for (double e : eig.values) {
    if (e < 0.0) {
      out.energies.push_back(e);
      if (e >= -kMarginalEnergy) ++marginal;
    }
  }
  out.diagnostics["all_eigenvalues"] = eig.values;
  out.diagnostics["marginal_count"] = marginal;

  std::vector<double> closure;
  for (double e : out.energies) {
    const auto params = BPolyParams::from_reduced_energy(p.ell(), reduced_energy(p, e));
    const auto b = bpoly_sequence(sys.basis.mu, params, sys.basis.dimension + 1);
    double scale = 0.0;
    for (int n = 0; n < sys.basis.dimension; ++n) scale = std::max(scale, std::abs(b[n]));
    closure.push_back(b.back() / scale);
  }
  out.diagnostics["closure_residual"] = closure;
  check_spectrum(out);
  return out;
}

std::vector<double> tra_coefficients(const PotentialParams& p, double energy) {
  if (!(energy < 0.0)) throw DomainError("tra_coefficients: energy must be negative");
  const TraBasis basis = tra_basis(p);
  if (basis.dimension == 0) return {};
  const BesselFamily fam(basis.mu, basis.dimension - 1);
  const auto b = bpoly_sequence(basis.mu, BPolyParams::from_reduced_energy(p.ell(), reduced_energy(p, energy)),
                                basis.dimension);
  std::vector<double> c(b.size());
  for (int n = 0; n < basis.dimension; ++n) c[n] = bessel_norm_squared(fam, n) * b[n];
  return c;
}

double tra_norm_squared(const PotentialParams& p, double energy) {
  const TraSystem sys = tra_assemble(p);
  if (sys.basis.dimension == 0) return 0.0;
  const auto v = basis_components(sys.basis, tra_coefficients(p, energy));
  const auto ov = sys.omega.multiply(v);
  double s = 0.0;
  for (std::size_t n = 0; n < v.size(); ++n) s += v[n] * ov[n];
  // Omega is the overlap in units of a
  return p.a() * s;
}

WavefunctionTable tra_wavefunction(const PotentialParams& p, double energy, std::span<const double> r_grid,
                                   WavefunctionScale scale) {
  const TraBasis basis = tra_basis(p);
  const auto c = tra_coefficients(p, energy);
  double f0 = 1.0;
  if (scale == WavefunctionScale::UnitNorm && !c.empty()) f0 = 1.0 / std::sqrt(tra_norm_squared(p, energy));

  WavefunctionTable table{p.ell(), energy, {r_grid.begin(), r_grid.end()}, std::vector<double>(r_grid.size(), 0.0)};
  if (c.empty()) return table;
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    const double r = r_grid[i];
    if (!(r > 0.0)) throw DomainError("tra_wavefunction: grid points must be positive");
    const double x = tra_variable(p, r);
    const auto y = bessel_values(basis.mu, x, basis.dimension);
    double sum = 0.0;
    for (std::size_t n = 0; n < c.size(); ++n) sum += c[n] * y[n];
    table.psi[i] = f0 * std::exp(basis.alpha() * std::log(x) - 0.5 / x) * sum;
  }
  return table;
}

NodeCount count_nodes(std::span<const double> psi, double lobe_fraction) {
  NodeCount out{0, 0};
  double peak = 0.0;
  for (double v : psi) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return out;

  // split into lobes of constant sign; exact zeros belong to no lobe
  std::vector<std::pair<int, double>> lobes;  // (sign, peak)
  for (double v : psi) {
    if (v == 0.0) continue;
    const int s = v > 0 ? 1 : -1;
    if (lobes.empty() || lobes.back().first != s) {
      if (!lobes.empty()) ++out.sign_changes;
      lobes.emplace_back(s, 0.0);
    }
    lobes.back().second = std::max(lobes.back().second, std::abs(v));
  }
  int last_sign = 0;
  for (const auto& [s, amp] : lobes) {
    if (amp < lobe_fraction * peak) continue;
    if (last_sign != 0 && s != last_sign) ++out.significant_nodes;
    last_sign = s;
  }
  return out;
}

}  // namespace iqs
