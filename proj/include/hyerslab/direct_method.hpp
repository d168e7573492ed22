#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hyerslab/types.hpp"

namespace hyerslab {

struct DirectMethodConfig {
  int k_max = 60;
  double tol = 1e-12;
};

using Sequence = std::function<double(int)>;

/// Given a sequence (b_k) with |b_{k+1} - c b_k| <= alpha_k and
/// beta = sum_k c^{-k-1} alpha_k finite, c^{-k} b_k converges to some b with
/// |b - b_0| <= beta.
///
/// `tail(k)` must bound sum_{j >= k} c^{-j-1} alpha_j. Iteration stops as soon
/// as tail(k) < tol, or after k_max steps (result then not certified).
/// An observed |b_{k+1} - c b_k| exceeding alpha_k beyond round-off throws
/// ContractViolation.
struct DirectMethodResult {
  double limit = 0.0;
  double beta = 0.0;       // accumulated sum_{j<k} c^{-j-1} alpha_j + tail(k)
  double remaining = 0.0;  // tail(k) at exit, bounds |limit - b|
  int iterations = 0;
  bool certified = false;
  double b0 = 0.0;
  std::vector<std::pair<int, double>> trace;  // (k, c^{-k} b_k)
};

DirectMethodResult direct_method(const Sequence& b, double c, const Sequence& alpha,
                                 const Sequence& tail, const DirectMethodConfig& cfg);

}  // namespace hyerslab
