#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "iqs/besselpoly.hpp"
#include "iqs/errors.hpp"
#include "iqs/linalg/symmetric.hpp"
#include "iqs/tra.hpp"
#include "oracles.hpp"

using namespace iqs;

namespace {

// Integral over (0, inf) of f, which behaves like r^power at large r.
// Adaptive Gauss-Kronrod per decade up to 1e12, closed-form power-law tail.
double integrate(const std::function<double(double)>& f, double power) {
  using boost::math::quadrature::gauss_kronrod;
  double sum = 0.0;
  double lo = 0.05;
  for (double hi = 0.1; hi <= 1e12; lo = hi, hi *= 10.0) {
    sum += gauss_kronrod<double, 31>::integrate(f, lo, hi, 12, 1e-13);
  }
  return sum + f(lo) * lo / -(power + 1.0);
}

// phi_n(r) = A_n x^{mu+3/4} e^{-1/2x} Y_n(x), x = (r/a)^2
double phi(const PotentialParams& p, int n, double r) {
  const TraBasis basis = tra_basis(p);
  const double x = tra_variable(p, r);
  const double an = bessel_norm(BesselFamily(basis.mu, basis.dimension - 1), n);
  return an * std::exp(basis.alpha() * std::log(x) - 0.5 / x) * bessel_values(basis.mu, x, n + 1)[n];
}

template <typename F>
double derivative(F f, double r) {
  const double h = 1e-3 * r;
  auto c = [&](double s) { return (f(r + s) - f(r - s)) / (2.0 * s); };
  const double r1 = (4.0 * c(0.5 * h) - c(h)) / 3.0;
  const double r2 = (4.0 * c(0.25 * h) - c(0.5 * h)) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

template <typename F>
double second_derivative(F f, double r) {
  const double h = 1e-2 * r;
  auto c = [&](double s) { return (f(r + s) - 2.0 * f(r) + f(r - s)) / (s * s); };
  const double r1 = (4.0 * c(0.5 * h) - c(h)) / 3.0;
  const double r2 = (4.0 * c(0.25 * h) - c(0.5 * h)) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

}  // namespace

TEST_CASE("basis sizes") {
  const auto b7 = tra_basis(PotentialParams(2.0, 7.0, 0));
  CHECK(b7.mu == -6.125);
  CHECK(b7.capacity == 6);
  CHECK(b7.dimension == 6);
  CHECK(b7.alpha() == -5.375);

  const auto b15 = tra_basis(PotentialParams(2.0, 15.0, 0));
  CHECK(b15.mu == -28.125);
  CHECK(b15.capacity == 28);
  CHECK(b15.dimension == 28);

  const auto weak = tra_basis(PotentialParams(1.0, 1.5, 0));
  CHECK(weak.capacity == 1);
  CHECK(weak.dimension == 1);

  SUBCASE("capacity boundary mu = -N - 1/2") {
    const auto edge = tra_basis(PotentialParams(1.0, std::sqrt(7.0), 0));
    CHECK(edge.mu == doctest::Approx(-3.5).epsilon(1e-15));
    CHECK(edge.capacity <= 4);
    CHECK(edge.capacity >= 3);
  }
  SUBCASE("fractional part of -mu above one half drops the top element") {
    const auto b = tra_basis(PotentialParams(1.0, std::sqrt(9.5), 0));
    CHECK(b.capacity == 5);
    CHECK(b.dimension == 4);
  }
  SUBCASE("very weak coupling leaves no square-integrable element") {
    const auto b = tra_basis(PotentialParams(1.0, 1.2, 0));
    CHECK(b.capacity == 1);
    CHECK(b.dimension == 0);
    const auto s = tra_spectrum(PotentialParams(1.0, 1.2, 0));
    CHECK(s.count() == 0);
  }
}

TEST_CASE("matrix elements") {
  const PotentialParams p(2.0, 7.0, 0);
  const auto sys = tra_assemble(p);
  // (1/16)[(1/2)^2 - (2 mu + 1)^2] with mu = -49/8
  const oracle::Rational mu(-49, 8);
  const oracle::Rational h0 = oracle::Rational(1, 16) * (oracle::Rational(1, 4) - (2 * mu + 1) * (2 * mu + 1));
  CHECK(sys.h_diag[0] == static_cast<double>(h0));
  CHECK(sys.h_diag[0] == -7.89453125);
  CHECK(sys.omega.diag[0] == doctest::Approx(0.25 / 5.125).epsilon(1e-15));
  const auto om = linalg::symtri_eigen(sys.omega);
  CHECK(om.values.front() > 0.0);
}

TEST_CASE("overlap and Hamiltonian agree with direct quadrature") {
  for (int ell : {0, 3}) {
    const PotentialParams p(2.0, 7.0, ell);
    const auto sys = tra_assemble(p);
    const int dim = sys.basis.dimension;
    const auto omega = sys.omega.to_dense();
    for (int n = 0; n < dim; ++n) {
      for (int m = n; m < dim && m <= n + 2; ++m) {
        const double power = 2.0 * (2.0 * sys.basis.alpha() + n + m);
        const double overlap = integrate([&](double r) { return phi(p, n, r) * phi(p, m, r); }, power) / p.a();
        const double scale = std::sqrt(omega(n, n) * omega(m, m));
        CHECK(std::abs(overlap - omega(n, m)) < 1e-7 * scale);

        const double energy = integrate([&](double r) {
                                const double dn = derivative([&](double s) { return phi(p, n, s); }, r);
                                const double dm = derivative([&](double s) { return phi(p, m, s); }, r);
                                return 0.5 * dn * dm + potential_value(p, r) * phi(p, n, r) * phi(p, m, r);
                              },
                              power - 2.0) /
                              p.a();
        const double want = n == m ? sys.h_diag[n] : 0.0;
        CHECK(std::abs(energy - want) < 1e-6 * std::sqrt(std::abs(sys.h_diag[n] * sys.h_diag[m])));
      }
    }
  }
}

TEST_CASE("spectrum for a = 2, b = 7") {
  const auto s0 = tra_spectrum(PotentialParams(2.0, 7.0, 0));
  const double table0[6] = {-195.833847586, -90.848444079, -33.647121748, -8.633176082, -1.041599359, -0.007529895};
  REQUIRE(s0.count() == 6);
  for (int k = 0; k < 6; ++k) CHECK(std::abs(s0.energies[k] - table0[k]) < 1e-6);
  CHECK(std::get<std::vector<double>>(s0.diagnostics.at("all_eigenvalues")).size() == 6);
  CHECK(std::get<long long>(s0.diagnostics.at("capacity")) == 6);
  for (double c : std::get<std::vector<double>>(s0.diagnostics.at("closure_residual"))) CHECK(std::abs(c) < 1e-8);

  const auto s5 = tra_spectrum(PotentialParams(2.0, 7.0, 5));
  REQUIRE(s5.count() == 3);
  CHECK(std::abs(s5.energies[0] + 145.081815855) < 1e-6);
  CHECK(std::abs(s5.energies[2] + 13.650143026) < 1e-6);

  const auto s3 = tra_spectrum(PotentialParams(2.0, 7.0, 3));
  CHECK(s3.count() == 4);
  CHECK(std::abs(s3.energies[0] + 175.349754004) < 1e-6);
}

TEST_CASE("counts and ordering across angular momenta") {
  for (double b : {7.0, 11.0, 15.0}) {
    std::size_t previous = 1000;
    std::vector<double> prev_energies;
    for (int ell = 0; ell <= 12; ++ell) {
      const PotentialParams p(2.0, b, ell);
      const auto s = tra_spectrum(p);
      CHECK(s.count() <= static_cast<std::size_t>(tra_basis(p).capacity));
      CHECK(s.count() <= previous);
      for (std::size_t k = 0; k < s.count() && k < prev_energies.size(); ++k) {
        CHECK(std::abs(s.energies[k]) < std::abs(prev_energies[k]));
      }
      previous = s.count();
      prev_energies = s.energies;
    }
  }
}

TEST_CASE("scaling law") {
  const PotentialParams p(2.0, 7.0, 2);
  const auto base = tra_spectrum(p);
  for (double sigma : {0.5, 2.0, 1.7}) {
    const auto s = tra_spectrum(p.scaled(sigma));
    REQUIRE(s.count() == base.count());
    for (std::size_t k = 0; k < s.count(); ++k) {
      CHECK(oracle::relative_error(s.energies[k], base.energies[k] / (sigma * sigma)) < 1e-9);
    }
  }
}

TEST_CASE("expansion coefficients") {
  const PotentialParams p(2.0, 7.0, 0);
  const double energy = -8.633176082;
  const auto c = tra_coefficients(p, energy);
  const TraBasis basis = tra_basis(p);
  const BesselFamily fam(basis.mu, basis.dimension - 1);
  REQUIRE(static_cast<int>(c.size()) == basis.dimension);
  CHECK(c[0] == doctest::Approx(bessel_norm_squared(fam, 0)).epsilon(1e-15));

  SUBCASE("direct iteration of the coefficient recursion") {
    const double mu = basis.mu;
    const double eps = reduced_energy(p, energy);
    const double q = 0.25;
    std::vector<double> pn{1.0};
    double prev = 0.0;
    for (int n = 0; n + 1 < basis.dimension; ++n) {
      const double up = eps / (n + mu + 1.0) *
                        std::sqrt(-(n + 1.0) * (n + 2.0 * mu + 1.0) / ((2.0 * n + 2.0 * mu + 1.0) * (2.0 * n + 2.0 * mu + 3.0)));
      const double down =
          n == 0 ? 0.0
                 : eps / (n + mu) * std::sqrt(-n * (n + 2.0 * mu) / ((2.0 * n + 2.0 * mu - 1.0) * (2.0 * n + 2.0 * mu + 1.0)));
      const double diag = (2.0 * n + 2.0 * mu + 1.0) * (2.0 * n + 2.0 * mu + 1.0) - mu * eps / ((n + mu) * (n + mu + 1.0));
      const double next = ((q - diag) * pn[n] - down * prev) / up;
      prev = pn[n];
      pn.push_back(next);
    }
    // P_n / (A_n B_n) is independent of n
    const double ratio0 = pn[0] / (c[0] / bessel_norm(fam, 0));
    for (int n = 1; n < basis.dimension; ++n) {
      CHECK(pn[n] / (c[n] / bessel_norm(fam, n)) == doctest::Approx(ratio0).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(tra_coefficients(p, 0.0), DomainError);
  CHECK_THROWS_AS(tra_coefficients(p, 1.0), DomainError);
}

TEST_CASE("wavefunction residual is the truncation tail") {
  const PotentialParams p(2.0, 7.0, 3);
  const auto s = tra_spectrum(p);
  const TraBasis basis = tra_basis(p);
  const int top = basis.dimension - 1;
  const double mu = basis.mu;
  for (double energy : s.energies) {
    const auto c = tra_coefficients(p, energy);
    const double eps = reduced_energy(p, energy);
    auto psi = [&](double r) {
      const std::vector<double> grid{r};
      return tra_wavefunction(p, energy, grid).psi[0];
    };
    for (double r : {1.0, 2.0, 5.0, 12.0, 20.0}) {
      const double numeric = -0.5 * second_derivative(psi, r) + (potential_value(p, r) - energy) * psi(r);
      const double x = tra_variable(p, r);
      const double tail = -1.0 / (2.0 * p.a() * p.a()) * std::exp((mu - 0.25) * std::log(x) - 0.5 / x) * eps * c[top] *
                          (top + 2.0 * mu + 1.0) / ((top + mu + 1.0) * (2.0 * top + 2.0 * mu + 1.0)) *
                          bessel_values(mu, x, top + 2)[top + 1];
      const double scale = std::abs(potential_value(p, r) - energy) * std::abs(psi(r)) + std::abs(tail);
      CHECK(std::abs(numeric - tail) < 1e-6 * scale);
    }
  }
}

TEST_CASE("normalization") {
  const PotentialParams p(2.0, 7.0, 3);
  const auto s = tra_spectrum(p);
  const TraBasis basis = tra_basis(p);
  const double power = 4.0 * (basis.alpha() + basis.dimension - 1);
  for (double energy : s.energies) {
    auto psi = [&](double r) {
      const std::vector<double> grid{r};
      return tra_wavefunction(p, energy, grid).psi[0];
    };
    const double direct = integrate([&](double r) { return psi(r) * psi(r); }, power);
    CHECK(oracle::relative_error(tra_norm_squared(p, energy), direct) < 1e-7);

    auto unit = [&](double r) {
      const std::vector<double> grid{r};
      return tra_wavefunction(p, energy, grid, WavefunctionScale::UnitNorm).psi[0];
    };
    CHECK(integrate([&](double r) { return unit(r) * unit(r); }, power) == doctest::Approx(1.0).epsilon(1e-7));
  }
}

TEST_CASE("wavefunction evaluation") {
  const PotentialParams p(2.0, 7.0, 3);
  const auto s = tra_spectrum(p);
  const std::vector<double> grid{0.1, 2.0, 400.0};
  const auto w = tra_wavefunction(p, s.energies[0], grid);
  CHECK(w.ell == 3);
  CHECK(w.energy == s.energies[0]);
  CHECK(std::abs(w.psi[0]) < 1e-60);
  CHECK(std::abs(w.psi[2]) < std::abs(w.psi[1]));
  const std::vector<double> bad{1.0, 0.0};
  CHECK_THROWS_AS(tra_wavefunction(p, s.energies[0], bad), DomainError);
}

TEST_CASE("node counting") {
  std::vector<double> wave;
  for (int i = 0; i < 400; ++i) wave.push_back(std::sin(3.0 * std::numbers::pi * (i + 0.5) / 400.0));
  auto n = count_nodes(wave);
  CHECK(n.sign_changes == 2);
  CHECK(n.significant_nodes == 2);

  // small trailing wiggle
  for (int i = 0; i < 50; ++i) wave.push_back(0.05 * std::sin(2.0 * std::numbers::pi * i / 50.0));
  n = count_nodes(wave);
  CHECK(n.sign_changes > 2);
  CHECK(n.significant_nodes == 2);

  const std::vector<double> zeros(10, 0.0);
  CHECK(count_nodes(zeros).sign_changes == 0);
  const std::vector<double> touching{1.0, 0.0, 1.0, 0.0, -1.0};
  CHECK(count_nodes(touching).sign_changes == 1);
}
