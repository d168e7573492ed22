#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hyerslab/types.hpp"

namespace hyerslab {

/// Piecewise saturating ramp: eps/6 on [1, inf), (eps/6) x on (-1, 1),
/// -eps/6 on (-inf, -1].
double zeta(double x, double eps);

/// f_G(x) = sum_{k>=0} 2^{-k} zeta(2^k x), in exact finite form:
/// (eps/6) (K x + sign(x) 2^{1-K}) with K the least k >= 0 such that 2^k |x| >= 1.
double gajda_exact(double x, double eps);

struct GajdaSeries {
  double value = 0.0;
  double tail_bound = 0.0;  // (eps/6) 2^{1-K_terms}
};

/// Partial sum of the first `terms` summands.
GajdaSeries gajda_series(double x, double eps, int terms);

/// Same, with a caller-supplied ramp (used to cross-check alternative ramps).
GajdaSeries gajda_series(double x, double eps, int terms,
                         const std::function<double(double, double)>& ramp);

/// f_G(x + y) - f_G(x) - f_G(y)
double cauchy_defect(double x, double y, double eps);

/// sum_i f_G(x_i) prod_{j != i} x_j over scalar arguments. Requires n >= 2.
double gajda_multi(const std::vector<double>& x, double eps);

// ---------------------------------------------------------------------------
// Counterexample 1: the family a_alpha(y) = alpha x_1 ... x_n against
// g = (eps/2) |x_1| ... |x_n|.

struct NonuniquenessVerdict {
  bool valid = false;             // |g - a_alpha| <= delta prod |x_i| on all of R^n
  bool positive_orthant = false;  // same, restricted to x_1 ... x_n >= 0
  bool sampler_agrees = false;    // sampling found a violation iff !valid
  double worst_ratio = 0.0;       // max sampled |g - a| / prod |x_i|
};

/// Decides validity analytically: on the orthants where prod x_i > 0 the
/// difference is |eps/2 - alpha| prod |x_i|, where prod x_i < 0 it is
/// |eps/2 + alpha| prod |x_i|. Confirmed on `samples` random points drawn
/// from every sign orthant.
NonuniquenessVerdict nonuniqueness_family(int n, double eps, double delta, double alpha,
                                          int samples = 4096, unsigned long long seed = 0x5EED);

// ---------------------------------------------------------------------------
// Counterexample 2: no additive map stays within delta |x| of f_G.

/// An additive map m: R -> R. Only its values on dyadic rationals are used,
/// where additivity alone forces m(x) = x m(1).
struct AdditiveCandidate {
  double slope = 0.0;  // m(1)
  std::function<double(double)> eval;
  bool additivity_ok = true;
  std::string note;
};

AdditiveCandidate linear_candidate(double slope);

/// Checks m(x) + m(x) = m(2x) and m(x) + m(y) = m(x + y) on dyadic samples.
bool check_dyadic_additivity(const std::function<double(double)>& m, double rel = 1e-12);

using SymmetricMap = std::function<double(const std::vector<double>&)>;

/// m(x) = a(1, ..., 1, x) - (n - 1) f_G(1) x. Additive whenever a is n-additive.
AdditiveCandidate reduce_to_additive(const SymmetricMap& a, int n, double eps);

struct WitnessReport {
  double x_star = 0.0;
  double lhs = 0.0;    // |f_G(x*) - m(x*)|
  double rhs = 0.0;    // delta |x*|
  double ratio = 0.0;  // lhs / rhs
  int depth = 0;       // N, with x* = 2^{-N}
  bool analytic = true;
  bool valid() const { return ratio > 1.0; }
};

/// x* = 2^{-N} with N = ceil(6 (delta + |m(1)|) / eps) + 1, so that
/// f_G(x*) >= (N eps / 6) x* outruns m(x*) + delta x*. Falls back to scanning
/// x = 2^{-j}, j = 1..200. When 2^{-N} is not a normal double, lhs and rhs are
/// reported divided by x*. Throws ContractViolation if nothing is found or the
/// candidate is flagged as non-additive.
WitnessReport find_witness(const AdditiveCandidate& m, double eps, double delta);

}  // namespace hyerslab
