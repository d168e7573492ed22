#include "hyerslab/gajda.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hyerslab/sampling.hpp"

namespace hyerslab {

double zeta(double x, double eps) {
  const double s = eps / 6.0;
  if (x >= 1.0) return s;
  if (x <= -1.0) return -s;
  return s * x;
}

double gajda_exact(double x, double eps) {
  if (x == 0.0) return 0.0;
  const double ax = std::fabs(x);
  // ilogb(|x|) = e with |x| in [2^e, 2^{e+1}); for |x| < 1 the least k with
  // 2^k |x| >= 1 is exactly -e.
  const int K = ax >= 1.0 ? 0 : -std::ilogb(ax);
  return eps / 6.0 * (K * x + std::copysign(std::ldexp(1.0, 1 - K), x));
}

GajdaSeries gajda_series(double x, double eps, int terms) {
  return gajda_series(x, eps, terms, [](double t, double e) { return zeta(t, e); });
}

GajdaSeries gajda_series(double x, double eps, int terms,
                         const std::function<double(double, double)>& ramp) {
  if (terms < 1) throw ConfigError("gajda_series needs at least one term");
  GajdaSeries s;
  for (int k = 0; k < terms; ++k) s.value += std::ldexp(ramp(std::ldexp(x, k), eps), -k);
  s.tail_bound = eps / 6.0 * std::ldexp(1.0, 1 - terms);
  return s;
}

double cauchy_defect(double x, double y, double eps) {
  return gajda_exact(x + y, eps) - gajda_exact(x, eps) - gajda_exact(y, eps);
}

double gajda_multi(const std::vector<double>& x, double eps) {
  if (x.size() < 2) throw ConfigError("gajda_multi needs n >= 2; use gajda_exact for n = 1");
  std::vector<double> v = x;
  std::sort(v.begin(), v.end());
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    double term = gajda_exact(v[i], eps);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (j != i) term *= v[j];
    total += term;
  }
  return total;
}

NonuniquenessVerdict nonuniqueness_family(int n, double eps, double delta, double alpha,
                                          int samples, unsigned long long seed) {
  if (n < 1) throw ConfigError("nonuniqueness_family needs n >= 1");
  if (!(eps > 0)) throw ConfigError("nonuniqueness_family needs eps > 0");
  NonuniquenessVerdict v;
  v.positive_orthant = std::fabs(eps / 2 - alpha) <= delta;
  v.valid = v.positive_orthant && std::fabs(eps / 2 + alpha) <= delta;

  Rng rng(seed);
  bool violated = false;
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int s = 0; s < std::max(samples, 2); ++s) {
    if (s < 2) {
      // one point with a positive and one with a negative product
      std::fill(x.begin(), x.end(), 1.0);
      if (s == 1) x[0] = -1.0;
    } else {
      for (auto& xi : x) {
        xi = rng.uniform(0.05, 8.0);
        if (rng.bits() & 1) xi = -xi;
      }
    }
    double signed_prod = 1.0, abs_prod = 1.0;
    for (double xi : x) {
      signed_prod *= xi;
      abs_prod *= std::fabs(xi);
    }
    const double diff = std::fabs(eps / 2 * abs_prod - alpha * signed_prod);
    v.worst_ratio = std::max(v.worst_ratio, diff / abs_prod);
    if (diff > delta * abs_prod * (1 + 1e-12)) violated = true;
  }
  v.sampler_agrees = violated == !v.valid;
  return v;
}

AdditiveCandidate linear_candidate(double slope) {
  AdditiveCandidate m;
  m.slope = slope;
  m.eval = [slope](double x) { return slope * x; };
  return m;
}

bool check_dyadic_additivity(const std::function<double(double)>& m, double rel) {
  auto close = [rel](double a, double b) {
    return std::fabs(a - b) <= rel * (std::fabs(a) + std::fabs(b)) + 1e-300;
  };
  std::vector<double> pts;
  for (int j = -8; j <= 24; ++j) {
    pts.push_back(std::ldexp(1.0, -j));
    pts.push_back(-std::ldexp(3.0, -j));
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double x = pts[i];
    if (!close(m(x) + m(x), m(2 * x))) return false;
    const double y = pts[(i * 7 + 3) % pts.size()];
    if (!close(m(x) + m(y), m(x + y))) return false;
  }
  return true;
}

AdditiveCandidate reduce_to_additive(const SymmetricMap& a, int n, double eps) {
  if (n < 2) throw ConfigError("reduce_to_additive needs n >= 2");
  const double f1 = gajda_exact(1.0, eps);
  AdditiveCandidate m;
  m.eval = [a, n, f1](double x) {
    std::vector<double> args(static_cast<std::size_t>(n), 1.0);
    args.back() = x;
    return a(args) - (n - 1) * f1 * x;
  };
  m.slope = m.eval(1.0);
  m.additivity_ok = check_dyadic_additivity(m.eval);
  if (!m.additivity_ok) m.note = "reduced map fails the dyadic additivity check; a is not n-additive";
  return m;
}

namespace {

WitnessReport evaluate_witness(const AdditiveCandidate& m, double eps, double delta, int depth) {
  WitnessReport w;
  w.depth = depth;
  w.x_star = std::ldexp(1.0, -depth);
  w.lhs = std::fabs(gajda_exact(w.x_star, eps) - m.eval(w.x_star));
  w.rhs = delta * std::fabs(w.x_star);
  w.ratio = w.rhs > 0 ? w.lhs / w.rhs : (w.lhs > 0 ? std::numeric_limits<double>::infinity() : 0.0);
  return w;
}

}  // namespace

WitnessReport find_witness(const AdditiveCandidate& m, double eps, double delta) {
  if (!(eps > 0)) throw ConfigError("find_witness needs eps > 0");
  if (!(delta >= 0)) throw ConfigError("find_witness needs delta >= 0");
  if (!m.additivity_ok) {
    throw ContractViolation("find_witness: candidate is not additive on dyadics" +
                            (m.note.empty() ? std::string() : " (" + m.note + ")"));
  }
  const double depth_real = std::ceil(6.0 * (delta + std::fabs(m.slope)) / eps) + 1.0;
  // 2^{-N} stays a normal double for N <= 1022
  if (depth_real <= 1022.0) {
    auto w = evaluate_witness(m, eps, delta, static_cast<int>(depth_real));
    if (w.valid()) return w;
  } else if (depth_real < 2e9) {
    // x* underflows; report both sides divided by x*, using f_G(x*) / x* =
    // (eps/6)(N + 2) and m(x*) / x* = m(1) on dyadics.
    WitnessReport w;
    w.depth = static_cast<int>(depth_real);
    w.x_star = std::ldexp(1.0, -w.depth);
    w.lhs = std::fabs(eps / 6.0 * (w.depth + 2) - m.slope);
    w.rhs = delta;
    w.ratio = w.lhs / w.rhs;
    if (w.valid()) return w;
  }
  for (int j = 1; j <= 200; ++j) {
    auto w = evaluate_witness(m, eps, delta, j);
    w.analytic = false;
    if (w.valid()) return w;
  }
  std::ostringstream msg;
  msg << "no witness found for slope " << m.slope << " (eps = " << eps << ", delta = " << delta
      << "); the candidate is probably not additive";
  throw ContractViolation(msg.str());
}

}  // namespace hyerslab
