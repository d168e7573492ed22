#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyerslab/control.hpp"
#include "hyerslab/direct_method.hpp"
#include "hyerslab/symmetric.hpp"

namespace hyerslab {

struct ApproximationResult {
  double value = 0.0;  // a(y)
  double g = 0.0;      // g(y)
  double bound = 0.0;  // R_n^{+/-} phi(y), certifies |g(y) - a(y)|
  double remaining = 0.0;
  int iterations_used = 0;
  bool certified = false;
  std::vector<std::pair<int, double>> trace;
};

struct HypothesisCheck {
  std::size_t samples = 512;
  // Sample z lie in [-1, 1]^{d(n+1)} scaled by 2^s * max(1, |y|_inf),
  // s an integer in [-scale_octaves, scale_octaves].
  int scale_octaves = 8;
};

/// Mode implied by a power control: Plus for r < 1, Minus for r > 1.
Mode mode_for(double r);

/// Checks |D_n g(z)| <= phi(z) on a deterministic Halton sample around y.
/// Throws ContractViolation naming the first offending z.
void check_defect_hypothesis(const SymmetricSpec& spec, const PowerControl& phi,
                             const Tuple& y, const HypothesisCheck& sampling);

/// a(y) = lim 2^{-nk} g(2^k y) (Plus) or lim 2^{nk} g(2^{-k} y) (Minus),
/// computed by the direct method with alpha from the double-step bound
/// |g(2y) - 2^n g(y)| <= r_n phi(y).
/// The defect hypothesis is spot-checked first unless `sampling` is empty.
ApproximationResult approximate(const SymmetricSpec& spec, const PowerControl& phi, const Tuple& y,
                                Mode mode, const DirectMethodConfig& cfg,
                                const std::optional<HypothesisCheck>& sampling = HypothesisCheck{});

/// Same limit evaluated through the shifted start 2^{k0} y and rescaled by
/// 2^{-n k0}. Used to check that the limit does not depend on the start.
ApproximationResult approximate_from_offset(const SymmetricSpec& spec, const PowerControl& phi,
                                            const Tuple& y, Mode mode, int k0,
                                            const DirectMethodConfig& cfg);

struct BoundEntry {
  Tuple y;
  double g = 0.0;
  double a = 0.0;
  double bound = 0.0;
  double slack = 0.0;  // bound - |g - a|
  bool ok = true;
};

struct BoundReport {
  std::vector<BoundEntry> entries;
  double worst_slack = 0.0;
  std::size_t violations = 0;
};

/// Compares |g(y) - a(y)| with R_n^{+/-} phi(y) at each sample.
/// `approximant[i]` is a(samples[i]).
BoundReport verify_pointwise_bound(const SymmetricSpec& spec, const std::vector<double>& approximant,
                                   const PowerControl& phi, Mode mode,
                                   const std::vector<Tuple>& samples, double tolerance = 1e-9);

}  // namespace hyerslab
