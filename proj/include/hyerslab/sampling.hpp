#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hyerslab {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;
inline constexpr const char* kPrngName = "mt19937_64, uniform = (bits >> 11) * 2^-53";

/// Seeded generator with a platform-independent uniform mapping
/// (std::uniform_real_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Halton point (index >= 1) in [0, 1)^dims, bases = first `dims` primes.
std::vector<double> halton(std::uint64_t index, std::size_t dims);

}  // namespace hyerslab
