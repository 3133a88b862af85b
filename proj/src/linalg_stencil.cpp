#include <algorithm>
#include <string>

#include "iqs/errors.hpp"
#include "iqs/linalg/stencil.hpp"

namespace iqs::linalg {

StencilWeights fornberg_weights(int derivative_order, std::span<const int> offsets) {
  const std::size_t n = offsets.size();
  if (derivative_order < 0) throw DomainError("fornberg_weights: negative derivative order");
  if (n < static_cast<std::size_t>(derivative_order) + 1) {
    throw DomainError("fornberg_weights: need at least " + std::to_string(derivative_order + 1) + " offsets");
  }
  std::vector<int> sorted(offsets.begin(), offsets.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("fornberg_weights: duplicate offsets");
  }

  // c[j][k]: weight of node j for the k-th derivative, built up one node at a time.
  const std::size_t m = static_cast<std::size_t>(derivative_order);
  std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
  c[0][0] = 1.0;
  double c1 = 1.0;
  double c4 = offsets[0];
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = offsets[i];
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = static_cast<double>(offsets[i]) - offsets[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }

  StencilWeights out;
  out.derivative_order = derivative_order;
  out.offsets.assign(offsets.begin(), offsets.end());
  out.weights.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.weights[j] = c[j][m];
  return out;
}

}  // namespace iqs::linalg
