#include "hyerslab/sampling.hpp"

namespace hyerslab {

namespace {

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t c = 2; primes.size() < count; ++c) {
    bool prime = true;
    for (auto p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

}  // namespace

std::vector<double> halton(std::uint64_t index, std::size_t dims) {
  const auto bases = first_primes(dims);
  std::vector<double> out(dims);
  for (std::size_t i = 0; i < dims; ++i) {
    const double b = static_cast<double>(bases[i]);
    double f = 1.0, v = 0.0;
    for (std::uint64_t k = index; k > 0; k /= bases[i]) {
      f /= b;
      v += f * static_cast<double>(k % bases[i]);
    }
    out[i] = v;
  }
  return out;
}

}  // namespace hyerslab
