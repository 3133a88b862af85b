#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iqs/fdm.hpp"
#include "iqs/model.hpp"
#include "iqs/spectrum.hpp"
#include "iqs/tra.hpp"

namespace iqs::cli {

/// Worker count: SPECTRA_THREADS when set to a positive integer, otherwise the hardware concurrency.
unsigned thread_budget();

/// 12 significant digits, shortest form, locale independent.
std::string format_number(double v);

struct RunRequest {
  std::vector<Method> methods{Method::Tra};
  double a = 2.0;
  double b = 7.0;
  int ell = 0;
  /// Sweep ell..ell_max; values below ell mean a single ell.
  int ell_max = -1;
  std::optional<double> lambda;
  bool auto_lambda = false;
  int size = 100;
  /// 0 selects the solver default.
  int quad_order = 0;
  FdConfig fd;
  int max_states = 6;
  unsigned threads = 1;
};

/// Laguerre scale used when neither --lambda nor --auto-lambda is given.
inline constexpr double kDefaultLambda = 0.25;

/// One result per (method, ell), ordered by method as requested, then by ell.
std::vector<SpectrumResult> run_spectrum(const RunRequest& req);

/// Header `method,a,b,ell,n,energy`.
void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumResult>& results);
/// Array of objects with the CSV columns per run plus a `diagnostics` object.
void write_spectrum_json(std::ostream& out, const std::vector<SpectrumResult>& results);

struct ConvergeTable {
  std::vector<int> sizes;
  std::vector<SpectrumResult> spectra;
};

/// One Laguerre spectrum per size at a fixed lambda. Sizes must strictly
/// increase. quad_order 0 uses a rule of the same order as each basis.
ConvergeTable run_converge(const PotentialParams& p, double lambda, const std::vector<int>& sizes, int quad_order = 0,
                           unsigned threads = 1);
/// Header `size,n,energy`.
void write_converge_csv(std::ostream& out, const ConvergeTable& table);

struct LevelFit {
  int n;
  double c0;
  double c2;
  double residual_norm;
  int points;
};

struct FitResult {
  std::vector<LevelFit> levels;
  std::vector<std::string> warnings;
};

/// Least squares E(n, l) = C2(n) l^2 - C0(n) for each level shared by at
/// least three angular momenta. Levels with fewer points are skipped with a warning.
FitResult fit_spectrum_formula(const std::map<int, SpectrumResult>& spectra);
/// Header `n,c0,c2,residual,points`.
void write_fit_csv(std::ostream& out, const FitResult& fit);

/// r_min + i (r_max - r_min)/(points - 1); a single point gives r_min.
std::vector<double> linear_grid(double r_min, double r_max, int points);

/// TRA wavefunctions for the requested levels. Throws DomainError for a level
/// outside the TRA spectrum.
std::vector<WavefunctionTable> run_wavefunction(const PotentialParams& p, const std::vector<int>& levels,
                                                const std::vector<double>& r_grid,
                                                WavefunctionScale scale = WavefunctionScale::Unnormalized);
/// Header `ell,level,energy,r,psi`.
void write_wavefunction_csv(std::ostream& out, const std::vector<int>& levels,
                            const std::vector<WavefunctionTable>& tables);

}  // namespace iqs::cli
