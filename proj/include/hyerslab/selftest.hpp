#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyerslab/sampling.hpp"

namespace hyerslab {

enum class Fault {
  None,
  // ramp whose (-inf, 1] branch takes precedence over (-1, 1)
  ZetaBranch,
};

Fault parse_fault(const std::string& name);

struct InvariantResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SelftestOptions {
  std::uint64_t seed = kDefaultSeed;
  Fault fault = Fault::None;
};

std::vector<InvariantResult> run_selftest(const SelftestOptions& opts = {});

}  // namespace hyerslab
