#include <cmath>

#include "doctest.h"
#include "hyerslab/direct_method.hpp"

using namespace hyerslab;

TEST_CASE("exact geometric sequence stops after one step") {
  const auto res = direct_method([](int k) { return std::ldexp(5.0, k); }, 2.0, [](int) { return 0.0; },
                                 [](int) { return 0.0; }, {});
  CHECK(res.limit == 5.0);
  CHECK(res.beta == 0.0);
  CHECK(res.iterations == 1);
  CHECK(res.certified);
  CHECK(res.limit == res.b0);
}

TEST_CASE("b_k = 2^k + 1 converges to 1 with beta = 1") {
  // |b_{k+1} - 2 b_k| = 1, sum_{j>=k} 2^{-j-1} = 2^{-k}
  const auto res = direct_method([](int k) { return std::ldexp(1.0, k) + 1.0; }, 2.0,
                                 [](int) { return 1.0; }, [](int k) { return std::ldexp(1.0, -k); },
                                 {60, 1e-12});
  CHECK(res.limit == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(res.beta == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::fabs(res.limit - res.b0) <= res.beta);
  CHECK(res.certified);
  CHECK(res.iterations == 40);
}

TEST_CASE("contraction base below one") {
  // b_k = 3^{-k} * 7 + 4^{-k}, c = 1/3: |b_{k+1} - b_k/3| = 4^{-k} |1/4 - 1/3| = 4^{-k}/12
  auto b = [](int k) { return 7.0 * std::pow(3.0, -k) + std::pow(4.0, -k); };
  auto alpha = [](int k) { return std::pow(4.0, -k) / 12.0; };
  // c^{-j-1} alpha_j = 3^{j+1} 4^{-j} / 12, summed from k: (3/4)^k * 3/12 * 4
  auto tail = [](int k) { return std::pow(0.75, k); };
  const auto res = direct_method(b, 1.0 / 3.0, alpha, tail, {200, 1e-12});
  CHECK(res.limit == doctest::Approx(7.0).epsilon(1e-11));
  CHECK(std::fabs(res.limit - res.b0) <= res.beta);
  CHECK(res.beta == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("k_max exhaustion leaves the result uncertified") {
  const auto res = direct_method([](int k) { return std::ldexp(1.0, k) + 1.0; }, 2.0,
                                 [](int) { return 1.0; }, [](int k) { return std::ldexp(1.0, -k); },
                                 {5, 1e-12});
  CHECK_FALSE(res.certified);
  CHECK(res.iterations == 5);
  CHECK(res.remaining == doctest::Approx(1.0 / 32));
  CHECK(res.trace.size() == 6);
}

TEST_CASE("a violated difference bound is an error") {
  CHECK_THROWS_AS(direct_method([](int k) { return std::ldexp(1.0, k) + k; }, 2.0,
                                [](int) { return 0.5; }, [](int k) { return std::ldexp(1.0, -k); }, {}),
                  ContractViolation);
  CHECK_THROWS_AS(direct_method([](int) { return 1.0; }, 2.0, [](int) { return -1.0; },
                                [](int) { return 0.0; }, {}),
                  ContractViolation);
  CHECK_THROWS_AS(direct_method([](int) { return 1.0; }, 0.0, [](int) { return 0.0; },
                                [](int) { return 0.0; }, {}),
                  ConfigError);
}
