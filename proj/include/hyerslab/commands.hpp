#pragma once

#include <string>

#include "hyerslab/config.hpp"
#include "hyerslab/report.hpp"
#include "hyerslab/symmetric.hpp"

namespace hyerslab {

inline constexpr const char* kToolVersion = "hyers-lab 1.0.0";

/// Builds the SymmetricSpec described by cfg.function.
SymmetricSpec function_from_config(const ScenarioConfig& cfg);

/// Samples z and compares |D_n g(z)| with phi(z).
Report cmd_defect(const ScenarioConfig& cfg);

/// Direct-method approximant and certified bound on the grid.
Report cmd_approx(const ScenarioConfig& cfg);

/// kappa, definitional and printed constants, and series values per (n, r).
Report cmd_constants(const ScenarioConfig& cfg);

/// Counterexamples at r = 1: the non-uniqueness sweep and the witnesses.
Report cmd_threshold(const ScenarioConfig& cfg);

}  // namespace hyerslab
