#include "hyerslab/control.hpp"

#include <cmath>
#include <sstream>

namespace hyerslab {

double evaluate_control(const PowerControl& phi, const Tuple& z) {
  const std::size_t d = z.empty() ? 1 : z.front().size();
  check_tuple(z, static_cast<std::size_t>(phi.n) + 1, d, "evaluate_control");
  const std::size_t n = static_cast<std::size_t>(phi.n);
  double prefix = 1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) prefix *= power_norm(z[i], phi.r);
  return phi.eps * prefix * (power_norm(z[n - 1], phi.r) + power_norm(z[n], phi.r));
}

double fold_control(const PowerControl& phi, const Tuple& y) {
  const std::size_t d = y.empty() ? 1 : y.front().size();
  check_tuple(y, static_cast<std::size_t>(phi.n), d, "fold_control");
  const std::size_t n = static_cast<std::size_t>(phi.n);
  if (n == 1) return evaluate_control(phi, {y[0], y[0]});

  double total = 0.0;
  double weight = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    Tuple z;
    z.reserve(n + 1);
    for (std::size_t i = 0; i + 1 + j < n; ++i) {
      Point p = y[i];
      for (auto& v : p) v *= 2.0;
      z.push_back(std::move(p));
    }
    for (std::size_t t = n - 1; t + j >= n; --t) z.push_back(y[t]);
    z.push_back(y[n - 1 - j]);
    z.push_back(y[n - 1 - j]);
    total += weight * evaluate_control(phi, z);
    weight *= 2.0;
  }
  return total;
}

double kappa(int n, double r) {
  double total = 0.0;
  for (int j = 0; j < n; ++j) total += std::pow(2.0, (n - 1 - j) * r + j + 1);
  return total;
}

double printed_fold_coefficient(int n, double r) {
  return std::pow(2.0, (n - 1) * (r - 1) + 1) * (std::pow(2.0, n * r) - std::pow(2.0, n)) /
         (std::pow(2.0, r) - 2.0);
}

namespace {

void reject_threshold(double r) {
  if (r == 1.0) {
    throw ThresholdError(
        "r = 1 is the stability threshold: power controls certify no approximant there; "
        "use the 'threshold' command for the counterexamples");
  }
}

}  // namespace

double stability_constant(int n, double r) {
  reject_threshold(r);
  return kappa(n, r) / std::fabs(std::pow(2.0, n) - std::pow(2.0, n * r));
}

double printed_stability_constant(int n, double r) {
  reject_threshold(r);
  return std::pow(2.0, (n - 1) * (r - 1) + 1) / std::fabs(std::pow(2.0, r) - 2.0);
}

void require_convergent(const PowerControl& phi, Mode mode) {
  if (!(phi.eps >= 0)) throw ConfigError("control eps must be nonnegative");
  if (mode == Mode::Plus && !(phi.r < 1.0)) {
    std::ostringstream msg;
    msg << "plus-branch convergence violated: sum 2^{-n(k+1)} phi(2^k z) diverges for r = " << phi.r
        << " (the Plus branch needs r < 1)";
    throw DivergentControl(msg.str());
  }
  if (mode == Mode::Minus && !(phi.r > 1.0)) {
    std::ostringstream msg;
    msg << "minus-branch convergence violated: sum 2^{nk} phi(2^{-k-1} z) diverges for r = " << phi.r
        << " (the Minus branch needs r > 1)";
    throw DivergentControl(msg.str());
  }
}

double stabilizer_term(const PowerControl& phi, const Tuple& y, Mode mode, int k) {
  if (mode == Mode::Plus) {
    return std::ldexp(fold_control(phi, scale_tuple(y, k)), -phi.n * (k + 1));
  }
  return std::ldexp(fold_control(phi, scale_tuple(y, -k - 1)), phi.n * k);
}

double stabilizer_ratio_bound(const PowerControl& phi, const Tuple& y, Mode mode) {
  require_convergent(phi, mode);
  if (mode == Mode::Minus) return std::pow(2.0, phi.n * (1.0 - phi.r));
  bool has_zero = false;
  for (const auto& p : y) has_zero = has_zero || norm(p) == 0.0;
  // With r <= 0 a zero point contributes the constant factor 1 instead of
  // scaling by 2^r, which can only slow the decay down to 2^{-n}.
  if (has_zero && phi.r <= 0.0) return std::ldexp(1.0, -phi.n);
  return std::pow(2.0, phi.n * (phi.r - 1.0));
}

double stabilizer_tail(const PowerControl& phi, const Tuple& y, Mode mode, int k) {
  const double q = stabilizer_ratio_bound(phi, y, mode);
  return stabilizer_term(phi, y, mode, k) / (1.0 - q);
}

SeriesValue stabilizer_series(const PowerControl& phi, const Tuple& y, Mode mode, int k_terms) {
  require_convergent(phi, mode);
  if (k_terms < 1) throw ConfigError("stabilizer_series needs k_terms >= 1");
  SeriesValue s;
  for (int k = 0; k < k_terms; ++k) s.value += stabilizer_term(phi, y, mode, k);
  s.tail_bound = stabilizer_tail(phi, y, mode, k_terms);
  return s;
}

double stabilizer_closed_form(const PowerControl& phi, const Tuple& y, Mode mode) {
  require_convergent(phi, mode);
  const double two_n = std::pow(2.0, phi.n);
  const double two_nr = std::pow(2.0, phi.n * phi.r);
  const double fold = fold_control(phi, y);
  return mode == Mode::Plus ? fold / (two_n - two_nr) : fold / (two_nr - two_n);
}

}  // namespace hyerslab
