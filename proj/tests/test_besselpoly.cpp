#include <doctest.h>

#include <cmath>
#include <vector>

#include "iqs/besselpoly.hpp"
#include "iqs/errors.hpp"
#include "bessel_identities.hpp"
#include "oracles.hpp"

using namespace iqs;

namespace {

struct MuCase {
  double mu;
  oracle::Rational exact;
};

const std::vector<MuCase> kMus{
    {-2.5, oracle::Rational(-5, 2)}, {-6.125, oracle::Rational(-49, 8)}, {-10.25, oracle::Rational(-41, 4)}};

using identities::d1;
using identities::d2;
using identities::exact_norm;
using identities::orthogonality_integral;
using identities::y;

}  // namespace

TEST_CASE("family bounds") {
  CHECK(largest_integer_below(3.0) == 2);
  CHECK(largest_integer_below(2.5) == 2);
  CHECK(largest_integer_below(-0.5) == -1);
  CHECK(BesselFamily(-6.125).n_max() == 5);
  CHECK(BesselFamily(-2.5).n_max() == 1);
  CHECK(BesselFamily(-10.25).n_max() == 9);
  CHECK(BesselFamily(-28.125).n_max() == 27);
  CHECK_NOTHROW(BesselFamily(-6.125, 5));
  CHECK_THROWS_AS(BesselFamily(-6.125, 6), DomainError);
  CHECK_THROWS_AS(BesselFamily(-0.4), DomainError);
  CHECK_THROWS_AS(BesselFamily(std::nan("")), DomainError);
}

TEST_CASE("low degrees") {
  for (const auto& c : kMus) {
    for (double x : {0.1, 0.7, 4.0}) {
      const auto v = bessel_sequence(BesselFamily(c.mu), x);
      CHECK(v[0] == 1.0);
      CHECK(v[1] == doctest::Approx(1.0 + 2.0 * (c.mu + 1.0) * x).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(bessel_values(-6.125, 0.0, 3), DomainError);
  CHECK_THROWS_AS(bessel_values(-6.125, -1.0, 3), DomainError);
  CHECK_THROWS_AS(bessel_values(-1.0, 1.0, 3), DegenerateParameter);
}

TEST_CASE("recursion agrees with the terminating hypergeometric series") {
  const std::vector<oracle::Rational> xs{oracle::Rational(7, 10), oracle::Rational(1, 4), oracle::Rational(3)};
  for (const auto& c : kMus) {
    const BesselFamily fam(c.mu);
    for (const auto& x : xs) {
      const auto v = bessel_sequence(fam, static_cast<double>(x));
      REQUIRE(static_cast<int>(v.size()) == fam.n_max() + 1);
      for (int n = 0; n <= fam.n_max(); ++n) {
        const double want = static_cast<double>(oracle::bessel_series(n, c.exact, x));
        CHECK(oracle::relative_error(v[n], want) < 1e-10);
      }
    }
  }
}

TEST_CASE("orthogonality and normalization") {
  for (const auto& c : kMus) {
    const BesselFamily fam(c.mu);
    const int top = std::min(fam.n_max(), 4);
    for (int n = 0; n <= top; ++n) {
      const double a2 = bessel_norm_squared(fam, n);
      CHECK(a2 * exact_norm(c.mu, n) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(bessel_norm(fam, n) == doctest::Approx(std::sqrt(a2)).epsilon(1e-14));
      for (int m = 0; m <= n; ++m) {
        const double integral = orthogonality_integral(c.mu, n, m);
        if (n == m) {
          CHECK(oracle::relative_error(integral, exact_norm(c.mu, n)) < 1e-6);
        } else {
          CHECK(std::abs(integral) < 1e-6 * std::sqrt(exact_norm(c.mu, n) * exact_norm(c.mu, m)));
        }
      }
    }
  }
  CHECK(bessel_norm(BesselFamily(-6.125), 0) == doctest::Approx(std::sqrt(11.25 / std::tgamma(12.25))).epsilon(1e-13));
  CHECK_THROWS_AS(bessel_norm(BesselFamily(-6.125), 6), DomainError);
  CHECK_THROWS_AS(bessel_norm(BesselFamily(-6.125), -1), DomainError);
}

TEST_CASE("norms stay finite for the strongest coupling in use") {
  const BesselFamily fam(-28.125);
  for (int n = 0; n <= fam.n_max(); ++n) {
    CHECK(std::isfinite(bessel_norm_squared(fam, n)));
    CHECK(bessel_norm_squared(fam, n) > 0.0);
  }
}

TEST_CASE("differential equation") {
  for (const auto& c : kMus) {
    const BesselFamily fam(c.mu);
    for (int n = 1; n <= fam.n_max(); ++n) {
      for (double x : {0.1, 1.0, 10.0}) {
        const double h = 1e-2 * x;
        const double yv = y(c.mu, n, x);
        const double dy = d1(c.mu, n, x, h);
        const double ddy = d2(c.mu, n, x, h);
        const double k = n * (n + 2.0 * c.mu + 1.0);
        const double res = x * x * ddy + (1.0 + 2.0 * x * (c.mu + 1.0)) * dy - k * yv;
        const double scale = std::abs(x * x * ddy) + std::abs((1.0 + 2.0 * x * (c.mu + 1.0)) * dy) + std::abs(k * yv);
        CHECK(std::abs(res) <= 1e-7 * scale);
      }
    }
  }
}

TEST_CASE("forward shift") {
  for (const auto& c : kMus) {
    // degree n - 1 of the mu + 1 family must stay in range
    const int top = std::min(BesselFamily(c.mu).n_max(), BesselFamily(c.mu + 1.0).n_max() + 1);
    for (int n = 1; n <= top; ++n) {
      for (double x : {0.2, 1.0, 5.0}) {
        const double want = n * (n + 2.0 * c.mu + 1.0) * y(c.mu + 1.0, n - 1, x);
        CHECK(oracle::relative_error(d1(c.mu, n, x, 1e-2 * x), want) < 1e-8);
      }
    }
  }
}

TEST_CASE("backward shift and the raising combination") {
  for (const auto& c : kMus) {
    const double mu = c.mu;
    const int top = BesselFamily(mu).n_max() - 1;
    for (int n = 1; n <= top; ++n) {
      for (double x : {0.2, 1.0, 5.0}) {
        const auto v = bessel_values(mu, x, n + 2);
        const double raised = bessel_values(mu - 1.0, x, n + 2)[n + 1];
        const double combo =
            0.5 * ((n + 1.0) * (n + 2.0 * mu) / ((n + mu) * (n + mu + 1.0)) * v[n] +
                   n * (n + 1.0) / ((n + mu) * (2.0 * n + 2.0 * mu + 1.0)) * v[n - 1] +
                   (n + 2.0 * mu) * (n + 2.0 * mu + 1.0) / ((n + mu + 1.0) * (2.0 * n + 2.0 * mu + 1.0)) * v[n + 1]);
        CHECK(oracle::relative_error(combo, raised) < 1e-10);

        const double dy = d1(mu, n, x, 1e-2 * x);
        CHECK(oracle::relative_error(x * x * dy + (2.0 * mu * x + 1.0) * v[n], raised) < 1e-8);

        const double k = n * (n + 2.0 * mu + 1.0);
        const double rhs = k * (-v[n] / ((n + mu) * (n + mu + 1.0)) + v[n - 1] / ((n + mu) * (2.0 * n + 2.0 * mu + 1.0)) +
                                v[n + 1] / ((n + mu + 1.0) * (2.0 * n + 2.0 * mu + 1.0)));
        CHECK(oracle::relative_error(2.0 * x * x * dy, rhs) < 1e-8);
      }
    }
  }
}

TEST_CASE("generating function") {
  for (const auto& c : kMus) {
    const int top = BesselFamily(c.mu).n_max();
    for (double x : {0.25, 1.0}) {
      const double t = 0.1 / (4.0 * x);
      const auto v = bessel_values(c.mu, x, top + 2);
      double partial = 0.0;
      double tn = 1.0;
      for (int n = 0; n <= top; ++n) {
        partial += v[n] * tn;
        tn *= t / (n + 1.0);
      }
      const double next = std::abs(v[top + 1] * tn);
      const double root = std::sqrt(1.0 - 4.0 * x * t);
      const double closed = std::pow(2.0, 2.0 * c.mu) / root * std::pow(1.0 + root, -2.0 * c.mu) * std::exp(2.0 * t / (1.0 + root));
      CHECK(std::abs(partial - closed) <= 2.0 * next + 1e-14 * std::abs(closed));
    }
  }
}

TEST_CASE("Laguerre connection") {
  for (const auto& c : kMus) {
    const BesselFamily fam(c.mu);
    for (double x : {0.3, 1.0, 6.0}) {
      const auto v = bessel_sequence(fam, x);
      for (int n = 0; n <= fam.n_max(); ++n) {
        const long double alpha = -2.0L * n - 2.0L * c.mu - 1.0L;
        const long double l = oracle::laguerre_values(alpha, 1.0L / x, n + 1)[n];
        const double want = static_cast<double>(std::tgamma(n + 1.0L) * std::pow(-x, n) * l);
        CHECK(oracle::relative_error(v[n], want) < 1e-10);
      }
    }
  }
}

TEST_CASE("coefficient polynomials") {
  const double mu = -6.125;
  const BPolyParams prm{-3.0, -1.7};
  const auto b = bpoly_sequence(mu, prm, 6);
  CHECK(b[0] == 1.0);
  const double b1 = (prm.z + 2.0 * mu / (mu * (mu + 1.0)) - prm.gamma * (mu + 0.5) * (mu + 0.5)) * (mu + 1.0) * (mu + 0.5) /
                    (2.0 * mu + 1.0);
  CHECK(b[1] == doctest::Approx(b1).epsilon(1e-14));

  // substitute back into the recursion
  for (int n = 1; n + 1 < 6; ++n) {
    const double lhs = prm.z * b[n];
    const double rhs = (-2.0 * mu / ((n + mu) * (n + mu + 1.0)) + prm.gamma * (n + mu + 0.5) * (n + mu + 0.5)) * b[n] -
                       n / ((n + mu) * (n + mu + 0.5)) * b[n - 1] +
                       (n + 2.0 * mu + 1.0) / ((n + mu + 1.0) * (n + mu + 0.5)) * b[n + 1];
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
  }

  SUBCASE("degree n in z") {
    for (int n = 1; n <= 5; ++n) {
      // (n+1)-th forward difference over equally spaced z vanishes
      std::vector<double> samples;
      double scale = 0.0;
      for (int j = 0; j <= n + 1; ++j) {
        const double v = bpoly_sequence(mu, {prm.gamma, -2.0 + 0.5 * j}, n + 1)[n];
        samples.push_back(v);
        scale = std::max(scale, std::abs(v));
      }
      for (int order = 0; order <= n; ++order) {
        for (std::size_t j = 0; j + 1 < samples.size() - order; ++j) samples[j] = samples[j + 1] - samples[j];
      }
      CHECK(std::abs(samples[0]) <= 1e-9 * scale);
    }
  }

  SUBCASE("parameters from the energy") {
    const auto q = BPolyParams::from_reduced_energy(2, -4.0);
    CHECK(q.gamma == -2.0);
    CHECK(q.z == doctest::Approx(-0.5 * 6.25).epsilon(1e-15));
    CHECK_THROWS_AS(BPolyParams::from_reduced_energy(0, 0.0), DomainError);
  }
  SUBCASE("degenerate denominators") {
    CHECK_THROWS_AS(bpoly_sequence(-1.0, prm, 3), DegenerateParameter);
    CHECK_THROWS_AS(bpoly_sequence(-0.5, prm, 3), DegenerateParameter);
    CHECK_THROWS_AS(bpoly_sequence(mu, prm, 0), DomainError);
  }
}

TEST_CASE("identity survey") {
  for (const auto& c : kMus) {
    for (const auto& check : identities::survey(c.exact)) {
      CAPTURE(c.mu);
      CAPTURE(check.name);
      CHECK(check.worst <= check.tol);
    }
  }
}
