#include "hyerslab/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>
#include <sstream>

#include "hyerslab/gajda.hpp"

namespace hyerslab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double linear_part(const Point& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

// Factors are multiplied in sorted order so that the result is bit-identical
// under any permutation of the arguments.
double sorted_product(std::vector<double> factors) {
  std::sort(factors.begin(), factors.end());
  double p = 1.0;
  for (double f : factors) p *= f;
  return p;
}

double product_linear(const Tuple& y) {
  std::vector<double> f;
  f.reserve(y.size());
  for (const auto& x : y) f.push_back(linear_part(x));
  return sorted_product(std::move(f));
}

double product_power(const Tuple& y, double r) {
  std::vector<double> f;
  f.reserve(y.size());
  for (const auto& x : y) f.push_back(power_norm(x, r));
  return sorted_product(std::move(f));
}

}  // namespace

void validate(const SymmetricSpec& spec) {
  if (spec.n < 1) throw ConfigError("arity n must be >= 1");
  if (spec.d < 1) throw ConfigError("dimension d must be >= 1");
  std::visit(overloaded{
                 [](const ExactMultiadditive&) {},
                 [](const PowerPerturbed&) {},
                 [](const AbsProduct& k) {
                   if (!(k.eps > 0)) throw ConfigError("AbsProduct requires eps > 0");
                 },
                 [&](const GajdaMulti& k) {
                   if (!(k.eps > 0)) throw ConfigError("GajdaMulti requires eps > 0");
                   if (spec.d != 1) throw ConfigError("GajdaMulti is defined for scalar points (d = 1)");
                 },
             },
             spec.kind);
}

std::string describe(const SymmetricSpec& spec) {
  std::ostringstream out;
  out.precision(17);
  std::visit(overloaded{
                 [&](const ExactMultiadditive& k) { out << "exact_multiadditive(c=" << k.c << ")"; },
                 [&](const PowerPerturbed& k) {
                   out << "power_perturbed(c=" << k.c << ",beta=" << k.beta << ",r=" << k.r << ")";
                 },
                 [&](const AbsProduct& k) { out << "abs_product(eps=" << k.eps << ")"; },
                 [&](const GajdaMulti& k) { out << "gajda_multi(eps=" << k.eps << ")"; },
             },
             spec.kind);
  out << " n=" << spec.n << " d=" << spec.d;
  return out.str();
}

double evaluate_symmetric(const SymmetricSpec& spec, const Tuple& y) {
  check_tuple(y, static_cast<std::size_t>(spec.n), static_cast<std::size_t>(spec.d),
              "evaluate_symmetric");
  return std::visit(overloaded{
                        [&](const ExactMultiadditive& k) { return k.c * product_linear(y); },
                        [&](const PowerPerturbed& k) {
                          return k.c * product_linear(y) + k.beta * product_power(y, k.r);
                        },
                        [&](const AbsProduct& k) { return 0.5 * k.eps * product_power(y, 1.0); },
                        [&](const GajdaMulti& k) {
                          if (spec.n == 1) return gajda_exact(y[0][0], k.eps);
                          std::vector<double> x(y.size());
                          for (std::size_t i = 0; i < y.size(); ++i) x[i] = y[i][0];
                          return gajda_multi(x, k.eps);
                        },
                    },
                    spec.kind);
}

namespace {

struct DefectArgs {
  Tuple sum, first, second;
};

DefectArgs defect_args(const SymmetricSpec& spec, const Tuple& z) {
  check_tuple(z, static_cast<std::size_t>(spec.n) + 1, static_cast<std::size_t>(spec.d), "defect");
  const std::size_t n = static_cast<std::size_t>(spec.n);
  DefectArgs a;
  a.first.assign(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n));
  a.second = a.first;
  a.second[n - 1] = z[n];
  a.sum = a.first;
  for (std::size_t i = 0; i < z[n].size(); ++i) a.sum[n - 1][i] = z[n - 1][i] + z[n][i];
  return a;
}

}  // namespace

double defect(const SymmetricSpec& spec, const Tuple& z) {
  const auto a = defect_args(spec, z);
  return evaluate_symmetric(spec, a.sum) - evaluate_symmetric(spec, a.first) -
         evaluate_symmetric(spec, a.second);
}

double defect_magnitude(const SymmetricSpec& spec, const Tuple& z) {
  const auto a = defect_args(spec, z);
  return std::fabs(evaluate_symmetric(spec, a.sum)) + std::fabs(evaluate_symmetric(spec, a.first)) +
         std::fabs(evaluate_symmetric(spec, a.second));
}

}  // namespace hyerslab
