#include "iqs/laguerre.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "iqs/errors.hpp"
#include "iqs/linalg/quadrature.hpp"
#include "iqs/linalg/symmetric.hpp"
#include "iqs/parallel.hpp"

namespace iqs {

LaguerreBasis::LaguerreBasis(int ell, double lambda_scale, int size) : ell_(ell), lambda_(lambda_scale), size_(size) {
  if (ell < 0) throw DomainError("LaguerreBasis: ell must be non-negative");
  if (!(lambda_scale > 0.0) || !std::isfinite(lambda_scale)) {
    throw DomainError("LaguerreBasis: lambda must be positive and finite");
  }
  if (size < 1) throw DomainError("LaguerreBasis: size must be at least 1");
}

int default_quad_order(const LaguerreBasis& basis) {
  const int q = 3 * basis.size();
  return basis.ell() == 0 ? std::max(q, 300) : q;
}

linalg::TridiagonalSymmetric lag_hamiltonian(const PotentialParams& p, const LaguerreBasis& basis) {
  require_zero_lambda(p, "laguerre");
  if (p.ell() != basis.ell()) throw DomainError("lag_hamiltonian: basis built for a different ell");
  const double lam = basis.lambda_scale();
  const double la4 = std::pow(lam * p.a(), 4);
  const double lb2 = (lam * p.b()) * (lam * p.b());
  const double half = 0.5 * lam * lam;
  const int n_size = basis.size();

  linalg::TridiagonalSymmetric h;
  h.diag.resize(static_cast<std::size_t>(n_size));
  h.offdiag.resize(static_cast<std::size_t>(n_size - 1));
  for (int n = 0; n < n_size; ++n) {
    h.diag[n] = half * ((la4 + 1.0) * (2.0 * n + p.ell() + 1.5) - 2.0 * lb2);
  }
  for (int n = 0; n + 1 < n_size; ++n) {
    h.offdiag[n] = -half * (la4 - 1.0) * std::sqrt((n + 1.0) * (n + p.ell() + 1.5));
  }
  return h;
}

linalg::DenseMatrix lag_overlap(const LaguerreBasis& basis, int quad_order) {
  const int n_size = basis.size();
  if (quad_order < n_size) {
    throw DomainError("lag_overlap: quad_order " + std::to_string(quad_order) + " is below the basis size " +
                      std::to_string(n_size));
  }
  const auto s = linalg::gauss_laguerre_samples(basis.nu(), quad_order, n_size);
  const auto& y = s.rule.nodes;

  std::vector<double> scaled(s.samples.size());
  for (int n = 0; n < n_size; ++n) {
    for (int k = 0; k < quad_order; ++k) scaled[n * quad_order + k] = s(n, k) / (y[k] * y[k]);
  }
  linalg::DenseMatrix omega(static_cast<std::size_t>(n_size));
  for (int n = 0; n < n_size; ++n) {
    for (int m = 0; m <= n; ++m) {
      double acc = 0.0;
      for (int k = 0; k < quad_order; ++k) acc += scaled[n * quad_order + k] * s(m, k);
      omega(n, m) = acc;
      omega(m, n) = acc;
    }
  }
  try {
    (void)linalg::cholesky(omega);
  } catch (const NotPositiveDefinite&) {
    throw NotPositiveDefinite("lag_overlap: overlap matrix is not positive definite at quad_order " +
                              std::to_string(quad_order) + "; raise quad_order");
  }
  return omega;
}

SpectrumResult lag_spectrum(const PotentialParams& p, const LaguerreBasis& basis, int quad_order) {
  if (quad_order == 0) quad_order = default_quad_order(basis);
  const auto h = lag_hamiltonian(p, basis);
  const auto omega = lag_overlap(basis, quad_order);
  const auto eig = linalg::generalized_sym_eigen(h, omega);

  SpectrumResult out{Method::Laguerre, p, {}, {}};
  for (double e : eig.values) {
    if (e < 0.0) out.energies.push_back(e);
  }
  const auto om = linalg::symmetric_eigen(omega, false);
  out.diagnostics["lambda"] = basis.lambda_scale();
  out.diagnostics["size"] = static_cast<long long>(basis.size());
  out.diagnostics["quad_order"] = static_cast<long long>(quad_order);
  out.diagnostics["omega_condition"] = om.values.back() / om.values.front();
  check_spectrum(out);
  return out;
}

namespace {

bool stable_pair(const SpectrumResult& lhs, const SpectrumResult& rhs, double rel_tol) {
  if (lhs.count() == 0 || lhs.count() != rhs.count()) return false;
  const double scale = std::max(std::abs(lhs.energies.front()), std::abs(rhs.energies.front()));
  for (std::size_t k = 0; k < lhs.count(); ++k) {
    if (std::abs(lhs.energies[k] - rhs.energies[k]) >= rel_tol * scale) return false;
  }
  return true;
}

}  // namespace

PlateauResult lag_plateau(const PotentialParams& p, int size, double low, double high, const PlateauOptions& opts) {
  if (!(low > 0.0) || !(high > low)) throw DomainError("lag_plateau: need 0 < low < high");
  if (opts.steps < 3) throw DomainError("lag_plateau: need at least 3 steps");
  const int steps = opts.steps;

  std::vector<double> lambdas(static_cast<std::size_t>(steps));
  const double ratio = std::log(high / low) / (steps - 1);
  for (int i = 0; i < steps; ++i) lambdas[i] = low * std::exp(ratio * i);
  lambdas.back() = high;

  // a failed solve (indefinite overlap) just breaks the window there
  std::vector<std::optional<SpectrumResult>> spectra(lambdas.size());
  parallel_for(lambdas.size(), opts.threads, [&](std::size_t i) {
    try {
      spectra[i] = lag_spectrum(p, LaguerreBasis(p.ell(), lambdas[i], size), opts.quad_order);
    } catch (const NumericalFailure&) {
    }
  });

  int best_begin = 0;
  int best_len = 1;
  int run_begin = 0;
  for (int i = 1; i < steps; ++i) {
    const bool ok = spectra[i - 1] && spectra[i] && stable_pair(*spectra[i - 1], *spectra[i], opts.rel_tol);
    if (!ok) {
      run_begin = i;
      continue;
    }
    if (i - run_begin + 1 > best_len) {
      best_len = i - run_begin + 1;
      best_begin = run_begin;
    }
  }
  if (best_len < 3) {
    throw NoPlateau("lag_plateau: no stable lambda window over [" + std::to_string(low) + ", " +
                    std::to_string(high) + "]; try a larger basis size");
  }

  PlateauResult out{0.0, lambdas[best_begin], lambdas[best_begin + best_len - 1], best_len, lambdas,
                    SpectrumResult{Method::Laguerre, p, {}, {}}};
  out.lambda_star = std::sqrt(out.window_low * out.window_high);
  out.spectrum = lag_spectrum(p, LaguerreBasis(p.ell(), out.lambda_star, size), opts.quad_order);
  out.spectrum.diagnostics["plateau_low"] = out.window_low;
  out.spectrum.diagnostics["plateau_high"] = out.window_high;
  out.spectrum.diagnostics["plateau_width"] = static_cast<long long>(out.width);
  return out;
}

}  // namespace iqs
