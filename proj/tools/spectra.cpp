#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iqs/cli.hpp"
#include "iqs/errors.hpp"
#include "iqs/laguerre.hpp"

namespace {

constexpr int kExitArgs = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double a = 2.0;
  double b = 7.0;
  int ell = 0;
  int ell_max = -1;
  std::string method = "tra";
  std::optional<double> lambda;
  bool auto_lambda = false;
  int size = 100;
  int quad_order = 0;
  int grid_m = 1000;
  int stencil_k = 8;
  int max_states = 6;
  std::vector<int> levels;
  std::vector<int> sizes{30, 40, 50, 70, 100};
  double r_min = 0.1;
  double r_max = 40.0;
  int r_points = 400;
  bool normalize = false;
  std::string out;
  std::string format = "csv";
};

void add_physics(CLI::App* cmd, Options& o) {
  cmd->add_option("--a", o.a, "Inner length a of the potential")->capture_default_str();
  cmd->add_option("--b", o.b, "Length b of the attractive term")->capture_default_str();
  cmd->add_option("--ell", o.ell, "Angular momentum (first of a sweep)")->capture_default_str()->check(
      CLI::NonNegativeNumber);
  cmd->add_option("--ell-max", o.ell_max, "Last angular momentum of a sweep");
}

void add_output(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "Output file (stdout when omitted)");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

void add_laguerre(CLI::App* cmd, Options& o) {
  cmd->add_option("--lambda", o.lambda, "Laguerre basis scale (default 0.25)");
  cmd->add_option("--size", o.size, "Laguerre basis size")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--quad-order", o.quad_order, "Gauss-Laguerre order for the overlap (0 = default)")
      ->capture_default_str();
}

void add_fd(CLI::App* cmd, Options& o) {
  cmd->add_option("--grid-M", o.grid_m, "Interior grid points")->capture_default_str();
  cmd->add_option("--stencil-k", o.stencil_k, "Stencil half width (order 2k)")->capture_default_str();
  cmd->add_option("--max-states", o.max_states, "Levels to extract")->capture_default_str();
}

template <typename Writer>
void emit(const Options& o, Writer&& write) {
  if (o.out.empty()) {
    write(std::cout);
    std::cout.flush();
    if (!std::cout) throw IoError("cannot write to stdout");
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw IoError("cannot open " + o.out);
  write(file);
  file.close();
  if (!file) throw IoError("cannot write " + o.out);
}

std::vector<iqs::Method> parse_methods(const std::string& name) {
  if (name == "all") return {iqs::Method::Tra, iqs::Method::Laguerre, iqs::Method::FiniteDifference};
  return {iqs::parse_method(name)};
}

iqs::cli::RunRequest make_request(const Options& o) {
  iqs::cli::RunRequest req;
  req.methods = parse_methods(o.method);
  req.a = o.a;
  req.b = o.b;
  req.ell = o.ell;
  req.ell_max = o.ell_max;
  req.lambda = o.lambda;
  req.auto_lambda = o.auto_lambda;
  req.size = o.size;
  req.quad_order = o.quad_order;
  req.fd.m_interior = o.grid_m;
  req.fd.half_width = o.stencil_k;
  req.fd.validate();
  req.max_states = o.max_states;
  req.threads = iqs::cli::thread_budget();
  return req;
}

void cmd_spectrum(const Options& o) {
  const auto results = iqs::cli::run_spectrum(make_request(o));
  emit(o, [&](std::ostream& os) {
    if (o.format == "json") {
      iqs::cli::write_spectrum_json(os, results);
    } else {
      iqs::cli::write_spectrum_csv(os, results);
    }
  });
}

void cmd_converge(const Options& o) {
  const iqs::PotentialParams p(o.a, o.b, o.ell);
  const auto table = iqs::cli::run_converge(p, o.lambda.value_or(iqs::cli::kDefaultLambda), o.sizes, o.quad_order,
                                            iqs::cli::thread_budget());
  emit(o, [&](std::ostream& os) { iqs::cli::write_converge_csv(os, table); });
}

void cmd_fit(const Options& o) {
  auto req = make_request(o);
  req.methods = {iqs::Method::Tra};
  std::map<int, iqs::SpectrumResult> by_ell;
  for (auto& r : iqs::cli::run_spectrum(req)) by_ell.emplace(r.params.ell(), std::move(r));
  const auto fit = iqs::cli::fit_spectrum_formula(by_ell);
  for (const auto& w : fit.warnings) std::cerr << "warning: " << w << '\n';
  emit(o, [&](std::ostream& os) { iqs::cli::write_fit_csv(os, fit); });
}

void cmd_wavefunction(const Options& o) {
  const iqs::PotentialParams p(o.a, o.b, o.ell);
  auto levels = o.levels;
  if (levels.empty()) {
    const auto count = iqs::tra_spectrum(p).count();
    for (std::size_t k = 0; k < count; ++k) levels.push_back(static_cast<int>(k));
  }
  const auto grid = iqs::cli::linear_grid(o.r_min, o.r_max, o.r_points);
  const auto scale = o.normalize ? iqs::WavefunctionScale::UnitNorm : iqs::WavefunctionScale::Unnormalized;
  const auto tables = iqs::cli::run_wavefunction(p, levels, grid, scale);
  emit(o, [&](std::ostream& os) { iqs::cli::write_wavefunction_csv(os, levels, tables); });
}

void cmd_plateau(const Options& o, double low, double high, int steps, double rel_tol) {
  const iqs::PotentialParams p(o.a, o.b, o.ell);
  iqs::PlateauOptions opts;
  opts.steps = steps;
  opts.rel_tol = rel_tol;
  opts.quad_order = o.quad_order;
  opts.threads = iqs::cli::thread_budget();
  const auto res = iqs::lag_plateau(p, o.size, low, high, opts);
  std::cerr << "plateau [" << iqs::cli::format_number(res.window_low) << ", "
            << iqs::cli::format_number(res.window_high) << "], " << res.width << " samples, lambda* = "
            << iqs::cli::format_number(res.lambda_star) << '\n';
  emit(o, [&](std::ostream& os) {
    if (o.format == "json") {
      iqs::cli::write_spectrum_json(os, {res.spectrum});
    } else {
      iqs::cli::write_spectrum_csv(os, {res.spectrum});
    }
  });
}

int report(const std::exception& e, int code) {
  std::cerr << "error: " << e.what() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound states of the inverse quartic-sextic radial potential"};
  app.require_subcommand(1);
  Options o;

  auto* spectrum = app.add_subcommand("spectrum", "Bound-state energies by one or all methods");
  add_physics(spectrum, o);
  spectrum->add_option("--method", o.method, "tra, laguerre, fd or all")
      ->check(CLI::IsMember({"tra", "laguerre", "fd", "all"}))
      ->capture_default_str();
  add_laguerre(spectrum, o);
  spectrum->add_flag("--auto-lambda", o.auto_lambda, "Pick lambda from the middle of the stability plateau");
  add_fd(spectrum, o);
  add_output(spectrum, o);

  auto* converge = app.add_subcommand("converge", "Laguerre spectra for increasing basis sizes");
  add_physics(converge, o);
  converge->add_option("--lambda", o.lambda, "Laguerre basis scale (default 0.25)");
  converge->add_option("--sizes", o.sizes, "Basis sizes, ascending")->delimiter(',')->capture_default_str();
  converge->add_option("--quad-order", o.quad_order, "Gauss-Laguerre order (0 = basis size)");
  add_output(converge, o);

  auto* fit = app.add_subcommand("fit", "Fit E = C2(n) l^2 - C0(n) over a TRA ell sweep");
  add_physics(fit, o);
  add_output(fit, o);

  auto* wave = app.add_subcommand("wavefunction", "Sample TRA wavefunctions on a radial grid");
  add_physics(wave, o);
  wave->add_option("--levels", o.levels, "Levels to sample (default: all)")->delimiter(',');
  wave->add_option("--r-min", o.r_min, "First radius")->capture_default_str();
  wave->add_option("--r-max", o.r_max, "Last radius")->capture_default_str();
  wave->add_option("--r-points", o.r_points, "Number of radii")->capture_default_str();
  wave->add_flag("--normalize", o.normalize, "Scale to unit norm");
  add_output(wave, o);

  double low = 0.05;
  double high = 1.0;
  int steps = 40;
  double rel_tol = 1e-6;
  auto* plateau = app.add_subcommand("plateau", "Locate the Laguerre lambda plateau");
  add_physics(plateau, o);
  plateau->add_option("--size", o.size, "Laguerre basis size")->capture_default_str();
  plateau->add_option("--quad-order", o.quad_order, "Gauss-Laguerre order (0 = default)");
  plateau->add_option("--low", low, "Smallest lambda")->capture_default_str();
  plateau->add_option("--high", high, "Largest lambda")->capture_default_str();
  plateau->add_option("--steps", steps, "Geometric lambda samples")->capture_default_str();
  plateau->add_option("--rel-tol", rel_tol, "Stability tolerance")->capture_default_str();
  add_output(plateau, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitArgs;
  }

  try {
    if (spectrum->parsed()) cmd_spectrum(o);
    if (converge->parsed()) cmd_converge(o);
    if (fit->parsed()) cmd_fit(o);
    if (wave->parsed()) cmd_wavefunction(o);
    if (plateau->parsed()) cmd_plateau(o, low, high, steps, rel_tol);
  } catch (const IoError& e) {
    return report(e, kExitIo);
  } catch (const iqs::DomainError& e) {
    return report(e, kExitArgs);
  } catch (const iqs::UnsupportedRegime& e) {
    return report(e, kExitArgs);
  } catch (const iqs::UnsupportedParameter& e) {
    return report(e, kExitArgs);
  } catch (const iqs::Error& e) {
    return report(e, kExitSolver);
  }
  return 0;
}
