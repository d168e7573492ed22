#include "hyerslab/direct_method.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace hyerslab {

DirectMethodResult direct_method(const Sequence& b, double c, const Sequence& alpha,
                                 const Sequence& tail, const DirectMethodConfig& cfg) {
  if (!(c > 0)) throw ConfigError("direct_method: contraction base c must be > 0");
  if (cfg.k_max < 1) throw ConfigError("direct_method: k_max must be >= 1");
  if (!(cfg.tol > 0)) throw ConfigError("direct_method: tol must be > 0");

  constexpr double kRoundoff = 8 * std::numeric_limits<double>::epsilon();

  DirectMethodResult res;
  res.b0 = b(0);
  res.trace.emplace_back(0, res.b0);
  double prev = res.b0;
  double accumulated = 0.0;

  for (int k = 1; k <= cfg.k_max; ++k) {
    const double bk = b(k);
    const double ak = alpha(k - 1);
    if (!(ak >= 0) || !std::isfinite(ak)) {
      std::ostringstream msg;
      msg << "alpha_" << k - 1 << " = " << ak << " is not a finite nonnegative number";
      throw ContractViolation(msg.str());
    }
    const double step = std::fabs(bk - c * prev);
    if (step > ak + kRoundoff * (std::fabs(bk) + std::fabs(c * prev))) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "difference bound violated at k = " << k - 1 << ": |b_{k+1} - c b_k| = " << step
          << " > alpha_k = " << ak;
      throw ContractViolation(msg.str());
    }
    const double scale = std::pow(c, -k);
    accumulated += scale * ak;
    res.limit = scale * bk;
    res.trace.emplace_back(k, res.limit);
    res.iterations = k;

    res.remaining = tail(k);
    if (!std::isfinite(res.remaining) || res.remaining < 0) {
      std::ostringstream msg;
      msg << "tail bound at k = " << k << " is " << res.remaining
          << "; sum c^{-k-1} alpha_k is not certified finite";
      throw ContractViolation(msg.str());
    }
    prev = bk;
    if (res.remaining < cfg.tol) {
      res.certified = true;
      break;
    }
  }
  res.beta = accumulated + res.remaining;
  return res;
}

}  // namespace hyerslab
