#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "iqs/errors.hpp"
#include "iqs/linalg/symmetric.hpp"

namespace iqs::linalg {

namespace {

constexpr int kMaxQlIterations = 60;

// Implicit QL iteration (Bowdler, Martin, Reinsch & Wilkinson, tql2).
// d: diagonal, e: e[i] couples i and i+1 with e[n-1] = 0 on entry.
// z: `rows` x n row-major, accumulates the rotations when rows > 0.
void tql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z, std::size_t rows) {
  const std::size_t n = d.size();
  if (n == 0) return;
  const double eps = std::numeric_limits<double>::epsilon();
  double f = 0.0;
  double tst1 = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n && std::abs(e[m]) > eps * tst1) ++m;
    if (m == n) m = n - 1;

    if (m > l) {
      int iter = 0;
      do {
        if (++iter > kMaxQlIterations) {
          throw NumericalFailure("symtri_eigen: QL iteration did not converge at index " + std::to_string(l));
        }
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[ii];
          h = c * p;
          r = std::hypot(p, e[ii]);
          e[ii + 1] = s * r;
          s = e[ii] / r;
          c = p / r;
          p = c * d[ii] - s * g;
          d[ii + 1] = h + s * (c * g + s * d[ii]);
          for (std::size_t k = 0; k < rows; ++k) {
            double* zk = z.data() + k * n;
            h = zk[ii + 1];
            zk[ii + 1] = s * zk[ii] + c * h;
            zk[ii] = c * zk[ii] - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

SymmetricEigen sorted(std::vector<double> d, std::vector<double> z, std::size_t rows) {
  const std::size_t n = d.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });
  SymmetricEigen out;
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = d[order[k]];
  out.vector_rows = rows;
  if (rows > 0) {
    out.vectors.resize(rows * n);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < n; ++k) out.vectors[i * n + k] = z[i * n + order[k]];
  }
  return out;
}

// Householder reduction of a symmetric matrix to tridiagonal form (tred2),
// accumulating the orthogonal transformation in v. On exit e[i] couples i and i+1.
void tred2(std::vector<double>& v, std::size_t n, std::vector<double>& d, std::vector<double>& e) {
  auto V = [&](std::size_t i, std::size_t j) -> double& { return v[i * n + j]; };
  for (std::size_t j = 0; j < n; ++j) d[j] = V(n - 1, j);

  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
        V(j, i) = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        V(j, i) = f;
        g = e[j] + V(j, j) * f;
        for (std::size_t k = j + 1; k <= i - 1; ++k) {
          g += V(k, j) * d[k];
          e[k] += V(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::size_t k = j; k <= i - 1; ++k) V(k, j) -= (f * e[k] + g * d[k]);
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    V(n - 1, i) = V(i, i);
    V(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (std::size_t k = 0; k <= i; ++k) d[k] = V(k, i + 1) / h;
      for (std::size_t j = 0; j <= i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k <= i; ++k) g += V(k, i + 1) * V(k, j);
        for (std::size_t k = 0; k <= i; ++k) V(k, j) -= g * d[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) V(k, i + 1) = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = V(n - 1, j);
    V(n - 1, j) = 0.0;
  }
  V(n - 1, n - 1) = 1.0;
  // shift so that e[i] couples i and i+1
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
}

}  // namespace

std::vector<double> SymmetricEigen::vector(std::size_t k) const {
  const std::size_t n = values.size();
  if (vector_rows != n) throw DomainError("SymmetricEigen::vector: only leading components were computed");
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = vectors[i * n + k];
  return v;
}

SymmetricEigen symtri_eigen(const TridiagonalSymmetric& t, std::size_t vector_rows) {
  t.validate();
  const std::size_t n = t.size();
  vector_rows = std::min(vector_rows, n);
  std::vector<double> d = t.diag;
  std::vector<double> e(n, 0.0);
  std::copy(t.offdiag.begin(), t.offdiag.end(), e.begin());
  std::vector<double> z(vector_rows * n, 0.0);
  for (std::size_t i = 0; i < vector_rows; ++i) z[i * n + i] = 1.0;
  tql(d, e, z, vector_rows);
  return sorted(std::move(d), std::move(z), vector_rows);
}

SymmetricEigen symmetric_eigen(const DenseMatrix& a, bool want_vectors) {
  const std::size_t n = a.size();
  if (!a.all_finite()) throw DomainError("symmetric_eigen: non-finite entry");
  if (n == 0) return {};
  std::vector<double> v(a.data().begin(), a.data().end());
  std::vector<double> d(n), e(n);
  tred2(v, n, d, e);
  const std::size_t rows = want_vectors ? n : 0;
  if (!want_vectors) v.clear();
  tql(d, e, v, rows);
  return sorted(std::move(d), std::move(v), rows);
}

DenseMatrix cholesky(const DenseMatrix& a) {
  const std::size_t n = a.size();
  DenseMatrix l(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = a(j, j);
    for (std::size_t k = 0; k < j; ++k) s -= l(j, k) * l(j, k);
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw NotPositiveDefinite("cholesky: matrix is not positive definite (pivot " + std::to_string(j) +
                                " = " + std::to_string(s) + ")");
    }
    const double ljj = std::sqrt(s);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double t = a(i, j);
      for (std::size_t k = 0; k < j; ++k) t -= l(i, k) * l(j, k);
      l(i, j) = t / ljj;
    }
  }
  return l;
}

GeneralizedEigen generalized_sym_eigen(const DenseMatrix& h, const DenseMatrix& omega) {
  const std::size_t n = h.size();
  if (omega.size() != n) throw DomainError("generalized_sym_eigen: H and Omega differ in size");
  if (!h.all_finite() || !omega.all_finite()) throw DomainError("generalized_sym_eigen: non-finite entry");
  const DenseMatrix l = cholesky(omega);

  // X = L^{-1} H, column by column via forward substitution on rows.
  DenseMatrix x(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = h(i, c);
      for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * x(k, c);
      x(i, c) = s / l(i, i);
    }
  }
  // C = L^{-1} X^T, valid because H is symmetric.
  DenseMatrix c(n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = x(col, i);
      for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * c(k, col);
      c(i, col) = s / l(i, i);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const double avg = 0.5 * (c(i, j) + c(j, i));
      c(i, j) = avg;
      c(j, i) = avg;
    }

  SymmetricEigen se = symmetric_eigen(c, true);
  GeneralizedEigen out;
  out.vectors = DenseMatrix(n);
  // back-transform: v = L^{-T} y
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t ii = n; ii-- > 0;) {
      double s = se.component(ii, k);
      for (std::size_t j = ii + 1; j < n; ++j) s -= l(j, ii) * out.vectors(j, k);
      out.vectors(ii, k) = s / l(ii, ii);
    }
  }
  out.values = std::move(se.values);
  return out;
}

GeneralizedEigen generalized_sym_eigen(const TridiagonalSymmetric& h, const DenseMatrix& omega) {
  h.validate();
  return generalized_sym_eigen(h.to_dense(), omega);
}

GeneralizedEigen generalized_sym_eigen(const std::vector<double>& h_diag, const TridiagonalSymmetric& omega) {
  omega.validate();
  if (h_diag.size() != omega.size()) throw DomainError("generalized_sym_eigen: H and Omega differ in size");
  return generalized_sym_eigen(DenseMatrix::diagonal(h_diag), omega.to_dense());
}

}  // namespace iqs::linalg
