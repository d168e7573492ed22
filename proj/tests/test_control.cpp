#include "doctest.h"
#include "hyerslab/control.hpp"
#include "hyerslab/sampling.hpp"
#include "oracles.hpp"

using namespace hyerslab;

namespace {
Tuple scalars(const std::vector<double>& xs) {
  Tuple t;
  for (double x : xs) t.push_back({x});
  return t;
}
}  // namespace

TEST_CASE("power control and the zero convention") {
  CHECK(evaluate_control({2, 1.0, 1.0}, scalars({2, 3, 4})) == doctest::Approx(14.0));
  CHECK(evaluate_control({1, 2.0, 2.0}, scalars({1, 3})) == doctest::Approx(20.0));
  // ||0||^r = 1 for r <= 0, 0 for r > 0
  CHECK(evaluate_control({2, 1.0, 0.0}, scalars({0, 0, 5})) == 2.0);
  CHECK(evaluate_control({2, 1.0, -1.0}, scalars({0, 2, 0})) == doctest::Approx(1.5));
  CHECK(evaluate_control({2, 1.0, 0.5}, scalars({0, 2, 3})) == 0.0);
}

TEST_CASE("fold_control examples") {
  // n = 1: empty prefix, phi(x, x) = 2 eps |x|^r
  CHECK(fold_control({1, 1.5, 0.5}, scalars({4})) == doctest::Approx(2 * 1.5 * 2.0));
  CHECK(fold_control({2, 1.0, 0.0}, scalars({0.3, -7})) == doctest::Approx(6.0));
  CHECK(fold_control({2, 1.0, 1.0}, scalars({1, 1})) == doctest::Approx(8.0));
}

TEST_CASE("fold_control agrees with the index-by-index oracle") {
  Rng rng(11);
  for (int n = 1; n <= 6; ++n)
    for (double r : {-1.0, 0.0, 0.3, 1.0, 2.5})
      for (int s = 0; s < 20; ++s) {
        std::vector<double> x(static_cast<std::size_t>(n));
        for (auto& v : x) v = rng.uniform(-3, 3);
        if (s == 0) x[0] = 0.0;
        const PowerControl phi{n, 0.8, r};
        CHECK(fold_control(phi, scalars(x)) == doctest::Approx(oracle::fold(x, 0.8, r)).epsilon(1e-14));
      }
}

TEST_CASE("kappa literal sum vs geometric closed form") {
  CHECK(kappa(1, 0.7) == 2.0);
  CHECK(kappa(2, 0.0) == 6.0);
  CHECK(kappa(2, 1.0) == 8.0);
  CHECK(kappa(4, 1.0) == 4 * 16.0);
  for (int n = 1; n <= 6; ++n)
    for (double r : {-1.0, -0.5, 0.0, 0.25, 0.5, 0.75, 1.5, 2.0, 3.0})
      CHECK(kappa(n, r) == doctest::Approx(oracle::kappa_geometric(n, r)).epsilon(1e-13));
}

TEST_CASE("printed corollary coefficient disagrees with kappa for n >= 2") {
  // 2^{(n-1)(r-1)+1} (2^{nr} - 2^n) / (2^r - 2) at n = 2, r = 0 is 3; kappa is 6
  CHECK(printed_fold_coefficient(2, 0.0) == doctest::Approx(3.0));
  for (double r : {-1.0, 0.0, 0.5, 2.0}) {
    CHECK(printed_fold_coefficient(1, r) == doctest::Approx(kappa(1, r)));
    for (int n = 2; n <= 5; ++n)
      CHECK(printed_fold_coefficient(n, r) != doctest::Approx(kappa(n, r)).epsilon(1e-6));
  }
}

TEST_CASE("stability constants") {
  CHECK(stability_constant(1, 0.0) == 2.0);
  CHECK(stability_constant(2, 0.0) == doctest::Approx(2.0));
  CHECK(printed_stability_constant(2, 0.0) == doctest::Approx(1.0));
  for (double r : {-1.0, 0.0, 0.5, 2.0, 3.0})
    CHECK(stability_constant(1, r) == 2.0 / std::fabs(2.0 - std::pow(2.0, r)));
  CHECK_THROWS_AS(stability_constant(2, 1.0), ThresholdError);
  CHECK_THROWS_AS(printed_stability_constant(2, 1.0), ThresholdError);
}

TEST_CASE("stabilizer_series examples") {
  const auto plus = stabilizer_series({2, 1.0, 0.0}, scalars({1, 1}), Mode::Plus, 40);
  CHECK(plus.value + plus.tail_bound == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(plus.tail_bound < 1e-12);

  const auto minus = stabilizer_series({1, 1.0, 2.0}, scalars({1}), Mode::Minus, 40);
  CHECK(minus.total() == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_WITH_AS(stabilizer_series({2, 1.0, 1.0}, scalars({1, 1}), Mode::Plus, 10),
                       doctest::Contains("plus-branch convergence violated"), DivergentControl);
  CHECK_THROWS_WITH_AS(stabilizer_series({2, 1.0, 0.5}, scalars({1, 1}), Mode::Minus, 10),
                       doctest::Contains("minus-branch convergence violated"), DivergentControl);
}

TEST_CASE("stabilizer_series matches brute-force summation") {
  Rng rng(5);
  for (int n = 1; n <= 3; ++n)
    for (double r : {-0.5, 0.0, 0.5, 0.9, 1.2, 1.5, 2.0}) {
      const bool plus = r < 1;
      std::vector<double> y(static_cast<std::size_t>(n));
      for (auto& v : y) v = rng.uniform(0.2, 3);
      const PowerControl phi{n, 1.0, r};
      const auto s = stabilizer_series(phi, scalars(y), plus ? Mode::Plus : Mode::Minus, 40);
      // 300 terms with the slowest ratio 2^{-0.1} leave a remainder below 1e-9
      const double brute = static_cast<double>(oracle::stabilizer_brute(y, 1.0, r, plus, 300));
      CHECK(s.total() == doctest::Approx(brute).epsilon(1e-8));
      CHECK(s.value <= brute * (1 + 1e-14));
    }
}

TEST_CASE("tail bound stays rigorous with zero points and r <= 0") {
  const PowerControl phi{2, 1.0, -1.0};
  const Tuple y = scalars({0.0, 3.0});
  const auto s = stabilizer_series(phi, y, Mode::Plus, 5);
  const double brute = static_cast<double>(oracle::stabilizer_brute({0.0, 3.0}, 1.0, -1.0, true, 200));
  CHECK(s.value <= brute);
  CHECK(s.total() >= brute * (1 - 1e-14));
}
