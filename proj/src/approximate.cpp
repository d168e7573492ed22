#include "hyerslab/approximate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hyerslab/sampling.hpp"

namespace hyerslab {

Mode mode_for(double r) {
  if (r == 1.0) {
    throw ThresholdError(
        "r = 1 is the stability threshold; no branch applies (see the 'threshold' command)");
  }
  return r < 1.0 ? Mode::Plus : Mode::Minus;
}

namespace {

void check_compatible(const SymmetricSpec& spec, const PowerControl& phi, const Tuple& y) {
  validate(spec);
  if (phi.n != spec.n) {
    std::ostringstream msg;
    msg << "control arity " << phi.n + 1 << " does not match function arity " << spec.n << " + 1";
    throw ConfigError(msg.str());
  }
  check_tuple(y, static_cast<std::size_t>(spec.n), static_cast<std::size_t>(spec.d), "approximate");
}

std::string format_tuple(const Tuple& z) {
  std::ostringstream out;
  out.precision(17);
  out << "(";
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i) out << ", ";
    if (z[i].size() == 1) {
      out << z[i][0];
    } else {
      out << "[";
      for (std::size_t j = 0; j < z[i].size(); ++j) out << (j ? " " : "") << z[i][j];
      out << "]";
    }
  }
  out << ")";
  return out.str();
}

}  // namespace

void check_defect_hypothesis(const SymmetricSpec& spec, const PowerControl& phi, const Tuple& y,
                             const HypothesisCheck& sampling) {
  constexpr double kRoundoff = 64 * std::numeric_limits<double>::epsilon();
  const std::size_t n = static_cast<std::size_t>(spec.n);
  const std::size_t d = static_cast<std::size_t>(spec.d);
  double radius = 1.0;
  for (const auto& p : y)
    for (double v : p) radius = std::max(radius, std::fabs(v));

  const std::size_t dims = d * (n + 1) + 1;
  const int octaves = 2 * sampling.scale_octaves + 1;
  for (std::size_t s = 1; s <= sampling.samples; ++s) {
    const auto u = halton(s, dims);
    const int octave = std::min(octaves - 1, static_cast<int>(u.back() * octaves)) -
                       sampling.scale_octaves;
    const double scale = std::ldexp(radius, octave);
    Tuple z(n + 1, Point(d));
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j < d; ++j) z[i][j] = (2.0 * u[i * d + j] - 1.0) * scale;

    const double lhs = std::fabs(defect(spec, z));
    const double rhs = evaluate_control(phi, z);
    if (lhs > rhs + kRoundoff * defect_magnitude(spec, z)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "defect hypothesis violated at z=" << format_tuple(z) << ": |D_n g(z)| = " << lhs
          << " > phi(z) = " << rhs;
      throw ContractViolation(msg.str());
    }
  }
}

ApproximationResult approximate(const SymmetricSpec& spec, const PowerControl& phi, const Tuple& y,
                                Mode mode, const DirectMethodConfig& cfg,
                                const std::optional<HypothesisCheck>& sampling) {
  check_compatible(spec, phi, y);
  require_convergent(phi, mode);
  if (sampling) check_defect_hypothesis(spec, phi, y, *sampling);

  const int n = spec.n;
  DirectMethodResult dm;
  if (mode == Mode::Plus) {
    dm = direct_method([&](int k) { return evaluate_symmetric(spec, scale_tuple(y, k)); },
                       std::ldexp(1.0, n),
                       [&](int k) { return fold_control(phi, scale_tuple(y, k)); },
                       [&](int k) { return stabilizer_tail(phi, y, mode, k); }, cfg);
  } else {
    dm = direct_method([&](int k) { return evaluate_symmetric(spec, scale_tuple(y, -k)); },
                       std::ldexp(1.0, -n),
                       [&](int k) { return std::ldexp(fold_control(phi, scale_tuple(y, -k - 1)), -n); },
                       [&](int k) { return stabilizer_tail(phi, y, mode, k); }, cfg);
  }

  ApproximationResult res;
  res.value = dm.limit;
  res.g = dm.b0;
  res.bound = dm.beta;
  res.remaining = dm.remaining;
  res.iterations_used = dm.iterations;
  res.certified = dm.certified;
  res.trace = std::move(dm.trace);
  return res;
}

ApproximationResult approximate_from_offset(const SymmetricSpec& spec, const PowerControl& phi,
                                            const Tuple& y, Mode mode, int k0,
                                            const DirectMethodConfig& cfg) {
  auto res = approximate(spec, phi, scale_tuple(y, k0), mode, cfg, std::nullopt);
  const int shift = -spec.n * k0;
  res.value = std::ldexp(res.value, shift);
  res.g = evaluate_symmetric(spec, y);
  res.bound = std::ldexp(res.bound, shift);
  res.remaining = std::ldexp(res.remaining, shift);
  for (auto& [k, v] : res.trace) v = std::ldexp(v, shift);
  return res;
}

BoundReport verify_pointwise_bound(const SymmetricSpec& spec, const std::vector<double>& approximant,
                                   const PowerControl& phi, Mode mode,
                                   const std::vector<Tuple>& samples, double tolerance) {
  if (approximant.size() != samples.size())
    throw ConfigError("verify_pointwise_bound: one approximant value per sample is required");
  BoundReport report;
  report.worst_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    BoundEntry e;
    e.y = samples[i];
    e.g = evaluate_symmetric(spec, samples[i]);
    e.a = approximant[i];
    e.bound = stabilizer_series(phi, samples[i], mode, 64).total();
    e.slack = e.bound - std::fabs(e.g - e.a);
    e.ok = e.slack >= -tolerance * std::max(1.0, std::fabs(e.g));
    if (!e.ok) ++report.violations;
    report.worst_slack = std::min(report.worst_slack, e.slack);
    report.entries.push_back(std::move(e));
  }
  if (samples.empty()) report.worst_slack = 0.0;
  return report;
}

}  // namespace hyerslab
