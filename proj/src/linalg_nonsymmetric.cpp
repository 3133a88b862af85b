#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "iqs/errors.hpp"
#include "iqs/linalg/nonsymmetric.hpp"

namespace iqs::linalg {

namespace {

// total sweep budget per eigenvalue, shared across the whole matrix as in LAPACK;
// the first deflation of a badly scaled matrix can take well over 60 sweeps
constexpr int kQrIterationsPerEigenvalue = 30;
constexpr int kMaxBalancePasses = 100;

// Row-major n x n scratch with the same layout as DenseMatrix.
struct Work {
  std::size_t n;
  std::vector<double> a;
  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double* row(std::size_t i) { return a.data() + i * n; }
};

// Similarity scaling by powers of two so that row and column norms are comparable.
void balance(Work& w) {
  constexpr double radix = 2.0;
  constexpr double sqrdx = radix * radix;
  const std::size_t n = w.n;
  std::vector<double> col(n);
  for (int pass = 0; pass < kMaxBalancePasses; ++pass) {
    bool done = true;
    std::fill(col.begin(), col.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double* r = w.row(j);
      for (std::size_t i = 0; i < n; ++i) col[i] += std::abs(r[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      double* ri = w.row(i);
      double r = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) r += std::abs(ri[j]);
      // column sums go stale once earlier rows are rescaled; recompute this one
      double c = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) c += std::abs(w(j, i));
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        const double inv = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) ri[j] *= inv;
        for (std::size_t j = 0; j < n; ++j) w(j, i) *= f;
      }
    }
    if (done) return;
  }
}

// Householder reduction to upper Hessenberg form (orthes), eigenvalues only.
void hessenberg(Work& w) {
  const std::size_t n = w.n;
  if (n < 3) return;
  std::vector<double> u(n), f(n);
  for (std::size_t m = 1; m + 1 < n; ++m) {
    double scale = 0.0;
    for (std::size_t i = m; i < n; ++i) scale += std::abs(w(i, m - 1));
    if (scale == 0.0) continue;
    double h = 0.0;
    for (std::size_t i = m; i < n; ++i) {
      u[i] = w(i, m - 1) / scale;
      h += u[i] * u[i];
    }
    const double g = u[m] > 0 ? -std::sqrt(h) : std::sqrt(h);
    h -= u[m] * g;
    u[m] -= g;

    // left: A <- (I - u u^T / h) A on rows m..n-1, columns m-1..n-1
    std::fill(f.begin(), f.end(), 0.0);
    for (std::size_t i = m; i < n; ++i) {
      const double ui = u[i];
      const double* r = w.row(i);
      for (std::size_t j = m; j < n; ++j) f[j] += ui * r[j];
    }
    for (std::size_t j = m; j < n; ++j) f[j] /= h;
    for (std::size_t i = m; i < n; ++i) {
      const double ui = u[i];
      double* r = w.row(i);
      for (std::size_t j = m; j < n; ++j) r[j] -= f[j] * ui;
    }
    // right: A <- A (I - u u^T / h) on all rows, columns m..n-1
    for (std::size_t i = 0; i < n; ++i) {
      double* r = w.row(i);
      double s = 0.0;
      for (std::size_t j = m; j < n; ++j) s += u[j] * r[j];
      s /= h;
      for (std::size_t j = m; j < n; ++j) r[j] -= s * u[j];
    }
    w(m, m - 1) = scale * g;
    for (std::size_t i = m + 1; i < n; ++i) w(i, m - 1) = 0.0;
  }
}

double sign_of(double magnitude, double sgn) { return sgn >= 0 ? std::abs(magnitude) : -std::abs(magnitude); }

// Francis double-shift QR on an upper Hessenberg matrix (hqr), eigenvalues only.
// 1-based accessor keeps the index arithmetic identical to the classical algorithm.
void hqr(Work& w, std::vector<double>& wr, std::vector<double>& wi) {
  const int n = static_cast<int>(w.n);
  auto a = [&](int i, int j) -> double& { return w.a[static_cast<std::size_t>(i - 1) * w.n + (j - 1)]; };
  const double eps = std::numeric_limits<double>::epsilon();

  double anorm = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += std::abs(a(i, j));

  int nn = n;
  double t = 0.0;
  const long long budget = static_cast<long long>(kQrIterationsPerEigenvalue) * std::max(n, 10);
  long long total = 0;
  while (nn >= 1) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l >= 2; --l) {
        double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(a(l, l - 1)) <= eps * s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      double x = a(nn, nn);
      if (l == nn) {
        wr[nn - 1] = x + t;
        wi[nn - 1] = 0.0;
        --nn;
      } else {
        double y = a(nn - 1, nn - 1);
        double wv = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          const double p = 0.5 * (y - x);
          const double q = p * p + wv;
          double z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + sign_of(z, p);
            wr[nn - 2] = wr[nn - 1] = x + z;
            if (z != 0.0) wr[nn - 1] = x - wv / z;
            wi[nn - 2] = wi[nn - 1] = 0.0;
          } else {
            wr[nn - 2] = wr[nn - 1] = x + p;
            wi[nn - 2] = -z;
            wi[nn - 1] = z;
          }
          nn -= 2;
        } else {
          if (total == budget) {
            throw NumericalFailure("dense_eigen: QR iteration did not converge (active block ending at " +
                                   std::to_string(nn) + ")");
          }
          if (its > 0 && its % 10 == 0) {
            // exceptional shift
            t += x;
            for (int i = 1; i <= nn; ++i) a(i, i) -= x;
            const double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
            y = x = 0.75 * s;
            wv = -0.4375 * s * s;
          }
          ++its;
          ++total;
          int m = nn - 2;
          double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
          for (; m >= l; --m) {
            z = a(m, m);
            r = x - z;
            double s = y - z;
            p = (r * s - wv) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - r - s;
            r = a(m + 2, m + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v = std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
            if (u <= eps * v) break;
          }
          for (int i = m + 2; i <= nn; ++i) {
            a(i, i - 2) = 0.0;
            if (i != m + 2) a(i, i - 3) = 0.0;
          }
          for (int k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = 0.0;
              if (k != nn - 1) r = a(k + 2, k - 1);
              x = std::abs(p) + std::abs(q) + std::abs(r);
              if (x != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            const double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
            if (s != 0.0) {
              if (k == m) {
                if (l != m) a(k, k - 1) = -a(k, k - 1);
              } else {
                a(k, k - 1) = -s * x;
              }
              p += s;
              x = p / s;
              y = q / s;
              z = r / s;
              q /= p;
              r /= p;
              double* rk = w.row(static_cast<std::size_t>(k - 1));
              double* rk1 = w.row(static_cast<std::size_t>(k));
              if (k != nn - 1) {
                double* rk2 = w.row(static_cast<std::size_t>(k + 1));
                for (int j = k - 1; j <= nn - 1; ++j) {
                  const double pp = rk[j] + q * rk1[j] + r * rk2[j];
                  rk2[j] -= pp * z;
                  rk1[j] -= pp * y;
                  rk[j] -= pp * x;
                }
              } else {
                for (int j = k - 1; j <= nn - 1; ++j) {
                  const double pp = rk[j] + q * rk1[j];
                  rk1[j] -= pp * y;
                  rk[j] -= pp * x;
                }
              }
              const int mmin = nn < k + 3 ? nn : k + 3;
              for (int i = l; i <= mmin; ++i) {
                double pp = x * a(i, k) + y * a(i, k + 1);
                if (k != nn - 1) {
                  pp += z * a(i, k + 2);
                  a(i, k + 2) -= pp * r;
                }
                a(i, k + 1) -= pp * q;
                a(i, k) -= pp;
              }
            }
          }
        }
      }
    } while (l < nn - 1);
  }
}

}  // namespace

std::vector<std::complex<double>> dense_eigen(const DenseMatrix& m) {
  if (!m.all_finite()) throw DomainError("dense_eigen: non-finite entry");
  const std::size_t n = m.size();
  if (n == 0) return {};
  Work w{n, std::vector<double>(m.data().begin(), m.data().end())};
  balance(w);
  hessenberg(w);
  std::vector<double> wr(n), wi(n);
  hqr(w, wr, wi);
  std::vector<std::complex<double>> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {wr[i], wi[i]};
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return out;
}

std::vector<double> real_eigenvector(const DenseMatrix& m, double eigenvalue) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("real_eigenvector: empty matrix");
  // LU with partial pivoting of (m - shift I); the shift is nudged off the
  // eigenvalue so the factorization stays non-singular.
  const double shift = eigenvalue + 1e-10 * std::max(1.0, std::abs(eigenvalue));
  Work lu{n, std::vector<double>(m.data().begin(), m.data().end())};
  for (std::size_t i = 0; i < n; ++i) lu(i, i) -= shift;
  std::vector<std::size_t> piv(n);
  const double tiny = std::numeric_limits<double>::epsilon() * std::max(1.0, m.norm());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(p, k))) p = i;
    piv[k] = p;
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
    if (std::abs(lu(k, k)) < tiny) lu(k, k) = tiny;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = lu(i, k) / lu(k, k);
      lu(i, k) = f;
      if (f == 0.0) continue;
      double* ri = lu.row(i);
      const double* rk = lu.row(k);
      for (std::size_t j = k + 1; j < n; ++j) ri[j] -= f * rk[j];
    }
  }
  std::vector<double> v(n, 1.0);
  for (int it = 0; it < 3; ++it) {
    for (std::size_t k = 0; k < n; ++k) std::swap(v[k], v[piv[k]]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < i; ++k) v[i] -= lu(i, k) * v[k];
    for (std::size_t ii = n; ii-- > 0;) {
      for (std::size_t k = ii + 1; k < n; ++k) v[ii] -= lu(ii, k) * v[k];
      v[ii] /= lu(ii, ii);
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
  }
  const auto big = std::max_element(v.begin(), v.end(), [](double x, double y) { return std::abs(x) < std::abs(y); });
  if (*big < 0)
    for (double& x : v) x = -x;
  return v;
}

}  // namespace iqs::linalg
