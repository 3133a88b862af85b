#include "iqs/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <thread>
#include <type_traits>

#include <json.hpp>

#include "iqs/errors.hpp"
#include "iqs/laguerre.hpp"
#include "iqs/parallel.hpp"

namespace iqs::cli {

namespace {

constexpr double kPlateauLow = 0.05;
constexpr double kPlateauHigh = 1.0;

SpectrumResult solve_one(Method method, const PotentialParams& p, const RunRequest& req) {
  switch (method) {
    case Method::Tra:
      return tra_spectrum(p);
    case Method::Laguerre: {
      if (req.auto_lambda) {
        PlateauOptions opts;
        opts.quad_order = req.quad_order;
        return lag_plateau(p, req.size, kPlateauLow, kPlateauHigh, opts).spectrum;
      }
      return lag_spectrum(p, LaguerreBasis(p.ell(), req.lambda.value_or(kDefaultLambda), req.size), req.quad_order);
    }
    case Method::FiniteDifference:
      return fd_spectrum(p, req.fd, req.max_states);
  }
  throw DomainError("run_spectrum: unknown method");
}

nlohmann::json to_json(const DiagnosticValue& v) {
  return std::visit([](const auto& x) { return nlohmann::json(x); }, v);
}

}  // namespace

unsigned thread_budget() {
  if (const char* env = std::getenv("SPECTRA_THREADS")) {
    unsigned value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::vector<SpectrumResult> run_spectrum(const RunRequest& req) {
  if (req.methods.empty()) throw DomainError("run_spectrum: no method requested");
  if (req.ell < 0) throw DomainError("run_spectrum: ell must be non-negative");
  const int ell_hi = std::max(req.ell, req.ell_max);
  const PotentialParams base(req.a, req.b, req.ell);

  struct Job {
    Method method;
    int ell;
  };
  std::vector<Job> jobs;
  for (Method m : req.methods) {
    for (int ell = req.ell; ell <= ell_hi; ++ell) jobs.push_back({m, ell});
  }
  std::vector<std::optional<SpectrumResult>> slots(jobs.size());
  parallel_for(jobs.size(), req.threads, [&](std::size_t i) {
    slots[i] = solve_one(jobs[i].method, base.with_ell(jobs[i].ell), req);
  });
  std::vector<SpectrumResult> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumResult>& results) {
  out << "method,a,b,ell,n,energy\n";
  for (const auto& r : results) {
    for (std::size_t n = 0; n < r.count(); ++n) {
      out << to_string(r.method) << ',' << format_number(r.params.a()) << ',' << format_number(r.params.b()) << ','
          << r.params.ell() << ',' << n << ',' << format_number(r.energies[n]) << '\n';
    }
  }
}

void write_spectrum_json(std::ostream& out, const std::vector<SpectrumResult>& results) {
  auto doc = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json diag = nlohmann::json::object();
    for (const auto& [key, value] : r.diagnostics) diag[key] = to_json(value);
    auto rows = nlohmann::json::array();
    for (std::size_t n = 0; n < r.count(); ++n) rows.push_back({{"n", n}, {"energy", r.energies[n]}});
    doc.push_back({{"method", std::string(to_string(r.method))},
                   {"a", r.params.a()},
                   {"b", r.params.b()},
                   {"ell", r.params.ell()},
                   {"levels", rows},
                   {"diagnostics", diag}});
  }
  out << doc.dump(2) << '\n';
}

ConvergeTable run_converge(const PotentialParams& p, double lambda, const std::vector<int>& sizes, int quad_order,
                           unsigned threads) {
  if (sizes.empty()) throw DomainError("run_converge: no sizes given");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) throw DomainError("run_converge: sizes must strictly increase");
  }
  std::vector<std::optional<SpectrumResult>> slots(sizes.size());
  parallel_for(sizes.size(), threads, [&](std::size_t i) {
    const int q = quad_order > 0 ? quad_order : sizes[i];
    slots[i] = lag_spectrum(p, LaguerreBasis(p.ell(), lambda, sizes[i]), q);
  });
  ConvergeTable table{sizes, {}};
  for (auto& s : slots) table.spectra.push_back(std::move(*s));
  return table;
}

void write_converge_csv(std::ostream& out, const ConvergeTable& table) {
  out << "size,n,energy\n";
  for (std::size_t i = 0; i < table.sizes.size(); ++i) {
    const auto& e = table.spectra[i].energies;
    for (std::size_t n = 0; n < e.size(); ++n) out << table.sizes[i] << ',' << n << ',' << format_number(e[n]) << '\n';
  }
}

FitResult fit_spectrum_formula(const std::map<int, SpectrumResult>& spectra) {
  std::size_t max_levels = 0;
  for (const auto& [ell, s] : spectra) max_levels = std::max(max_levels, s.count());

  FitResult fit;
  for (std::size_t n = 0; n < max_levels; ++n) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& [ell, s] : spectra) {
      if (n < s.count()) {
        xs.push_back(static_cast<double>(ell) * ell);
        ys.push_back(s.energies[n]);
      }
    }
    const std::size_t distinct = [&] {
      auto sorted = xs;
      std::sort(sorted.begin(), sorted.end());
      return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }();
    if (distinct < 3) {
      fit.warnings.push_back("level " + std::to_string(n) + ": only " + std::to_string(distinct) +
                             " angular momenta, skipped");
      continue;
    }
    // centred normal equations
    const double m = static_cast<double>(xs.size());
    double xbar = 0.0;
    double ybar = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      xbar += xs[i];
      ybar += ys[i];
    }
    xbar /= m;
    ybar /= m;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxx += (xs[i] - xbar) * (xs[i] - xbar);
      sxy += (xs[i] - xbar) * (ys[i] - ybar);
    }
    const double slope = sxy / sxx;
    const double intercept = ybar - slope * xbar;
    double rss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double d = ys[i] - (intercept + slope * xs[i]);
      rss += d * d;
    }
    fit.levels.push_back({static_cast<int>(n), -intercept, slope, std::sqrt(rss), static_cast<int>(xs.size())});
  }
  return fit;
}

void write_fit_csv(std::ostream& out, const FitResult& fit) {
  out << "n,c0,c2,residual,points\n";
  for (const auto& l : fit.levels) {
    out << l.n << ',' << format_number(l.c0) << ',' << format_number(l.c2) << ',' << format_number(l.residual_norm)
        << ',' << l.points << '\n';
  }
}

std::vector<double> linear_grid(double r_min, double r_max, int points) {
  if (points < 1) throw DomainError("linear_grid: need at least one point");
  if (!(r_min > 0.0) || !(r_max >= r_min)) throw DomainError("linear_grid: need 0 < r_min <= r_max");
  if (points == 1) return {r_min};
  std::vector<double> r(static_cast<std::size_t>(points));
  const double step = (r_max - r_min) / (points - 1);
  for (int i = 0; i < points; ++i) r[i] = r_min + step * i;
  r.back() = r_max;
  return r;
}

std::vector<WavefunctionTable> run_wavefunction(const PotentialParams& p, const std::vector<int>& levels,
                                                const std::vector<double>& r_grid, WavefunctionScale scale) {
  const auto spectrum = tra_spectrum(p);
  std::vector<WavefunctionTable> out;
  for (int level : levels) {
    if (level < 0 || static_cast<std::size_t>(level) >= spectrum.count()) {
      throw DomainError("run_wavefunction: level " + std::to_string(level) + " outside the " +
                        std::to_string(spectrum.count()) + " bound states at ell = " + std::to_string(p.ell()));
    }
    out.push_back(tra_wavefunction(p, spectrum.energies[level], r_grid, scale));
  }
  return out;
}

void write_wavefunction_csv(std::ostream& out, const std::vector<int>& levels,
                            const std::vector<WavefunctionTable>& tables) {
  out << "ell,level,energy,r,psi\n";
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const auto& w = tables[t];
    for (std::size_t i = 0; i < w.r.size(); ++i) {
      out << w.ell << ',' << levels[t] << ',' << format_number(w.energy) << ',' << format_number(w.r[i]) << ','
          << format_number(w.psi[i]) << '\n';
    }
  }
}

}  // namespace iqs::cli
