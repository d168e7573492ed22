#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyerslab/sampling.hpp"

namespace hyerslab {

struct GridSpec {
  double min = -4.0;
  double max = 4.0;
  int count = 9;
  bool operator==(const GridSpec&) const = default;

  std::vector<double> axis() const;
};

struct FunctionConfig {
  std::string kind = "power_perturbed";  // exact | power_perturbed | abs_product | gajda_multi
  double c = 1.0;
  double beta = 0.1;
  std::optional<double> exponent;  // defaults to the control exponent r
  std::optional<double> eps;       // defaults to the control eps
  bool operator==(const FunctionConfig&) const = default;
};

/// One experiment. Loaded from a YAML file, then overridden by CLI flags.
struct ScenarioConfig {
  std::string name = "scenario";
  int n = 2;
  int d = 1;
  double eps = 1.0;  // control eps (and counterexample eps)
  double r = 0.5;    // control exponent
  std::vector<double> deltas{0.25, 1.0, 4.0, 16.0};
  std::vector<double> alphas;      // empty: 9 values across the widened interval
  std::vector<double> candidates{0.0, 1.0, -1.0, 10.0, -10.0};
  bool fit_candidate = true;
  std::vector<int> n_values{1, 2, 3, 4, 5};
  std::vector<double> r_values{-1.0, -0.5, 0.0, 0.25, 0.5, 0.75, 1.5, 2.0, 3.0};
  FunctionConfig function;
  GridSpec grid;
  int samples = 10000;
  std::uint64_t seed = kDefaultSeed;
  int k_max = 60;
  double tol = 1e-12;
  int hypothesis_samples = 512;
  std::string out;  // empty: stdout
  std::string format = "csv";

  bool operator==(const ScenarioConfig&) const = default;
};

/// Throws ConfigError on unknown keys, bad types or violated invariants.
ScenarioConfig parse_config(const std::string& yaml_text);
ScenarioConfig load_config(const std::string& path);

/// Canonical YAML form: every field, fixed order, 17 significant digits.
std::string serialize_config(const ScenarioConfig& cfg);

void validate_config(const ScenarioConfig& cfg);

/// 64-bit FNV-1a of the canonical form, ignoring the output path.
std::uint64_t config_hash(const ScenarioConfig& cfg);

/// Parses "min:max:count".
GridSpec parse_grid(const std::string& text);

/// Parses a comma separated list of reals.
std::vector<double> parse_list(const std::string& text);

}  // namespace hyerslab
