#include <cmath>

#include "doctest.h"
#include "hyerslab/approximate.hpp"
#include "hyerslab/sampling.hpp"

using namespace hyerslab;

namespace {
Tuple scalars(std::initializer_list<double> xs) {
  Tuple t;
  for (double x : xs) t.push_back({x});
  return t;
}
}  // namespace

TEST_CASE("multiadditive input is a fixed point") {
  const SymmetricSpec spec{2, 1, ExactMultiadditive{1.0}};
  const auto res = approximate(spec, {2, 1.0, 0.5}, scalars({2, 3}), Mode::Plus, {});
  CHECK(res.value == 6.0);
  CHECK(res.certified);
  for (const auto& [k, v] : res.trace) CHECK(v == 6.0);
  CHECK(res.bound >= 0.0);
}

TEST_CASE("perturbation that scales away is removed (Plus)") {
  const SymmetricSpec spec{2, 1, PowerPerturbed{1.0, 0.1, 0.5}};
  const PowerControl phi{2, 0.1, 0.5};
  const auto res = approximate(spec, phi, scalars({1, 1}), Mode::Plus, {});
  CHECK(res.certified);
  CHECK(res.value == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(std::fabs(res.value - 1.0) <= res.remaining + 1e-15);
  CHECK(res.g == doctest::Approx(1.1));
  CHECK(std::fabs(res.g - res.value) <= res.bound);
  // R_2^+ phi(1, 1) = 0.1 kappa(2, 0.5) / (4 - 2)
  CHECK(res.bound == doctest::Approx(0.1 * kappa(2, 0.5) / 2).epsilon(1e-12));
  CHECK(res.iterations_used <= 60);
}

TEST_CASE("Minus branch for exponent above one") {
  const SymmetricSpec spec{2, 1, PowerPerturbed{1.0, 0.1, 2.0}};
  const PowerControl phi{2, 0.1, 2.0};
  const auto res = approximate(spec, phi, scalars({3, -2}), Mode::Minus, {});
  CHECK(res.certified);
  CHECK(res.value == doctest::Approx(-6.0).epsilon(1e-12));
  CHECK(std::fabs(res.g - res.value) <= res.bound);
}

TEST_CASE("vector-valued points") {
  const SymmetricSpec spec{2, 2, PowerPerturbed{1.0, 0.2, 0.25}};
  const PowerControl phi{2, 0.2, 0.25};
  const Tuple y{{1.0, 0.5}, {-2.0, 1.0}};
  const auto res = approximate(spec, phi, y, Mode::Plus, {});
  CHECK(res.value == doctest::Approx(1.5 * -1.0).epsilon(1e-11));
}

TEST_CASE("start offsets give the same limit") {
  const SymmetricSpec spec{2, 1, PowerPerturbed{1.0, 0.1, 0.5}};
  const PowerControl phi{2, 0.1, 0.5};
  const double base = approximate(spec, phi, scalars({-3, 2}), Mode::Plus, {}).value;
  for (int k0 = 1; k0 <= 3; ++k0) {
    const auto res = approximate_from_offset(spec, phi, scalars({-3, 2}), Mode::Plus, k0, {});
    CHECK(res.value == doctest::Approx(base).epsilon(1e-10));
    CHECK(res.g == doctest::Approx(-6 + 0.1 * std::sqrt(6.0)));
  }
}

TEST_CASE("preconditions") {
  const SymmetricSpec abs{2, 1, AbsProduct{1.0}};
  CHECK_THROWS_AS(approximate(abs, {2, 1.0, 1.0}, scalars({1, 1}), Mode::Plus, {}), DivergentControl);
  // |D_2 g| reaches |x_1| min(|x_2|, |x_3|), which outgrows |x_1|^r (|x_2|^r + |x_3|^r) for r < 1
  CHECK_THROWS_WITH_AS(approximate(abs, {2, 1.0, 0.5}, scalars({1, 1}), Mode::Plus, {}),
                       doctest::Contains("defect hypothesis violated at z="), ContractViolation);
  CHECK_THROWS_AS(approximate(abs, {3, 1.0, 0.5}, scalars({1, 1}), Mode::Plus, {}), ConfigError);
  CHECK_THROWS_AS(mode_for(1.0), ThresholdError);
  CHECK(mode_for(0.99) == Mode::Plus);
  CHECK(mode_for(1.01) == Mode::Minus);
}

TEST_CASE("coordinates outside the dyadic range are rejected") {
  const SymmetricSpec spec{1, 1, ExactMultiadditive{1.0}};
  CHECK_THROWS_AS(approximate(spec, {1, 1.0, 0.5}, scalars({0x1.0p480}), Mode::Plus, {60, 1e-300},
                              std::nullopt),
                  RangeError);
}

TEST_CASE("verify_pointwise_bound") {
  const SymmetricSpec exact{2, 1, ExactMultiadditive{1.0}};
  const PowerControl phi{2, 0.1, 0.5};
  std::vector<Tuple> pts{scalars({1, 2}), scalars({-3, 0.5})};
  const auto rep = verify_pointwise_bound(exact, {2.0, -1.5}, phi, Mode::Plus, pts);
  CHECK(rep.violations == 0);
  for (const auto& e : rep.entries) CHECK(e.slack == doctest::Approx(e.bound));

  const auto bad = verify_pointwise_bound(exact, {2.0 + 10.0, -1.5}, phi, Mode::Plus, pts);
  CHECK(bad.violations == 1);
  CHECK(bad.worst_slack < 0);

  const auto empty = verify_pointwise_bound(exact, {}, phi, Mode::Plus, {});
  CHECK(empty.entries.empty());
  CHECK(empty.violations == 0);
}

TEST_CASE("perturbed grid in [-4, 4]^2 has no bound violations") {
  const SymmetricSpec spec{2, 1, PowerPerturbed{1.0, 0.1, 0.5}};
  const PowerControl phi{2, 0.1, 0.5};
  std::vector<Tuple> pts;
  std::vector<double> vals;
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j) {
      pts.push_back(scalars({double(i), double(j)}));
      vals.push_back(approximate(spec, phi, pts.back(), Mode::Plus, {}, std::nullopt).value);
    }
  CHECK(verify_pointwise_bound(spec, vals, phi, Mode::Plus, pts, 1e-9).violations == 0);
}
