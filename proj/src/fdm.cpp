#include "iqs/fdm.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "iqs/errors.hpp"
#include "iqs/linalg/nonsymmetric.hpp"
#include "iqs/linalg/stencil.hpp"
#include "iqs/parallel.hpp"

namespace iqs {

namespace {

using std::numbers::pi;

// Row i (1-based grid index) of a derivative matrix over nodes [first, last].
void fill_row(linalg::DenseMatrix& d, int i, int first, int last, int order, int m) {
  std::vector<int> offsets;
  for (int j = first; j <= last; ++j) offsets.push_back(j - i);
  const auto w = linalg::fornberg_weights(order, offsets);
  for (std::size_t t = 0; t < offsets.size(); ++t) {
    const int col = first + static_cast<int>(t);
    if (col >= 1 && col <= m) d(i - 1, col - 1) = w.weights[t];
  }
}

linalg::DenseMatrix derivative_matrix(const FdConfig& cfg, int order) {
  cfg.validate();
  const int m = cfg.m_interior;
  const int k = cfg.half_width;
  const int extra = order == 2 ? 1 : 0;
  linalg::DenseMatrix d(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    if (i < k) {
      fill_row(d, i, 0, 2 * k + extra, order, m);
    } else if (i <= m + 1 - k) {
      fill_row(d, i, i - k, i + k, order, m);
    } else {
      fill_row(d, i, m + 1 - 2 * k - extra, m + 1, order, m);
    }
  }
  const double scale = std::pow(cfg.step(), -order);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (double& v : d.row(i)) v *= scale;
  }
  return d;
}

struct Selection {
  std::vector<double> real_sorted;
  long long discarded = 0;
};

Selection real_eigenvalues(const linalg::DenseMatrix& j, const FdConfig& cfg) {
  Selection out;
  for (const auto& z : linalg::dense_eigen(j)) {
    if (std::abs(z.imag()) <= cfg.imag_tol * std::abs(z.real()) + cfg.abs_floor) {
      out.real_sorted.push_back(z.real());
    } else {
      ++out.discarded;
    }
  }
  std::sort(out.real_sorted.begin(), out.real_sorted.end());
  return out;
}

}  // namespace

void FdConfig::validate() const {
  if (half_width < 1) throw DomainError("FdConfig: stencil half width k must be at least 1");
  if (m_interior < 2 * half_width + 2) throw DomainError("FdConfig: need M >= 2k + 2");
  if (!(tau_coeff > 0.0) || !std::isfinite(tau_exp)) throw DomainError("FdConfig: bad tau schedule");
  if (!(imag_tol >= 0.0) || !(abs_floor >= 0.0)) throw DomainError("FdConfig: tolerances must be non-negative");
}

double fd_tau(int j, const FdConfig& cfg) {
  if (j < 1) throw DomainError("fd_tau: level index must be at least 1");
  return cfg.tau_coeff * std::pow(static_cast<double>(j), cfg.tau_exp);
}

linalg::DenseMatrix fd_first_derivative(const FdConfig& cfg) { return derivative_matrix(cfg, 1); }

linalg::DenseMatrix fd_second_derivative(const FdConfig& cfg) { return derivative_matrix(cfg, 2); }

linalg::DenseMatrix fd_assemble_kinetic(double tau, const FdConfig& cfg) {
  if (!(tau > 0.0)) throw DomainError("fd_assemble: tau must be positive");
  const auto d1 = fd_first_derivative(cfg);
  const auto d2 = fd_second_derivative(cfg);
  const double h = cfg.step();
  const double t2 = tau * tau;
  linalg::DenseMatrix j(d1.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const double s = (i + 1) * h;
    const double c = std::cos(0.5 * pi * s);
    const double sn = std::sin(0.5 * pi * s);
    const double a = -(2.0 * t2 / (pi * pi)) * c * c * c * c;
    const double b = (2.0 * t2 / pi) * c * c * c * sn;
    auto out = j.row(i);
    auto r1 = d1.row(i);
    auto r2 = d2.row(i);
    for (std::size_t col = 0; col < j.size(); ++col) out[col] = a * r2[col] + b * r1[col];
  }
  return j;
}

linalg::DenseMatrix fd_assemble(const PotentialParams& p, double tau, const FdConfig& cfg) {
  require_zero_lambda(p, "fd");
  auto j = fd_assemble_kinetic(tau, cfg);
  const double h = cfg.step();
  for (std::size_t i = 0; i < j.size(); ++i) j(i, i) += mapped_potential_value(p, tau, (i + 1) * h);
  return j;
}

SpectrumResult fd_spectrum(const PotentialParams& p, const FdConfig& cfg, int max_states, unsigned threads) {
  cfg.validate();
  if (max_states < 1) throw DomainError("fd_spectrum: max_states must be at least 1");
  std::vector<Selection> solves(static_cast<std::size_t>(max_states));
  parallel_for(solves.size(), threads, [&](std::size_t idx) {
    const int level = static_cast<int>(idx) + 1;
    solves[idx] = real_eigenvalues(fd_assemble(p, fd_tau(level, cfg), cfg), cfg);
  });

  SpectrumResult out{Method::FiniteDifference, p, {}, {}};
  std::vector<double> taus;
  std::vector<double> discarded;
  for (int level = 1; level <= max_states; ++level) {
    const auto& sel = solves[level - 1];
    taus.push_back(fd_tau(level, cfg));
    discarded.push_back(static_cast<double>(sel.discarded));
    if (static_cast<int>(sel.real_sorted.size()) < level) {
      out.diagnostics["warning"] = "level " + std::to_string(level) + ": only " +
                                   std::to_string(sel.real_sorted.size()) + " real eigenvalues";
      break;
    }
    const double e = sel.real_sorted[level - 1];
    if (!(e < 0.0)) break;
    out.energies.push_back(e);
  }
  out.diagnostics["tau"] = taus;
  out.diagnostics["discarded_complex"] = discarded;
  out.diagnostics["grid_M"] = static_cast<long long>(cfg.m_interior);
  out.diagnostics["stencil_k"] = static_cast<long long>(cfg.half_width);
  check_spectrum(out);
  return out;
}

SpectrumResult fd_spectrum_fixed_tau(const PotentialParams& p, double tau, const FdConfig& cfg, int max_states) {
  if (max_states < 1) throw DomainError("fd_spectrum_fixed_tau: max_states must be at least 1");
  const auto sel = real_eigenvalues(fd_assemble(p, tau, cfg), cfg);
  SpectrumResult out{Method::FiniteDifference, p, {}, {}};
  for (double e : sel.real_sorted) {
    if (!(e < 0.0) || static_cast<int>(out.count()) == max_states) break;
    out.energies.push_back(e);
  }
  out.diagnostics["tau"] = tau;
  out.diagnostics["discarded_complex"] = static_cast<long long>(sel.discarded);
  out.diagnostics["mode"] = std::string("fixed_tau");
  check_spectrum(out);
  return out;
}

}  // namespace iqs
