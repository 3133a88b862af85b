#pragma once

#include <span>
#include <vector>

namespace iqs::linalg {

/// Finite-difference weights for the derivative of `derivative_order` at
/// offset 0 from samples at integer `offsets` (in units of h). Apply as
/// sum_j weights[j] f(x + offsets[j] h) / h^derivative_order.
struct StencilWeights {
  int derivative_order = 0;
  std::vector<int> offsets;
  std::vector<double> weights;
};

/// Fornberg's recursive algorithm for arbitrary distinct nodes; the result has
/// the maximal consistency order the node set allows.
StencilWeights fornberg_weights(int derivative_order, std::span<const int> offsets);

}  // namespace iqs::linalg
