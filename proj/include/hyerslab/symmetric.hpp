#pragma once

#include <string>
#include <variant>

#include "hyerslab/types.hpp"

namespace hyerslab {

// Catalog of symmetric functions g: (R^d)^n -> R. For d > 1 the linear
// functional s(x) = x_1 + ... + x_d stands in for the scalar coordinate in the
// multiadditive parts, and the Euclidean norm in the absolute-value parts.

/// g(y) = c * s(x_1) ... s(x_n)
struct ExactMultiadditive {
  double c = 1.0;
};

/// g(y) = c * s(x_1) ... s(x_n) + beta * ||x_1||^r ... ||x_n||^r
struct PowerPerturbed {
  double c = 1.0;
  double beta = 0.1;
  double r = 0.5;
};

/// g(y) = (eps / 2) ||x_1|| ... ||x_n||
struct AbsProduct {
  double eps = 1.0;
};

/// g(y) = sum_i f_G(x_i) prod_{j != i} x_j, scalar points only (d = 1).
struct GajdaMulti {
  double eps = 1.0;
};

using SymmetricKind = std::variant<ExactMultiadditive, PowerPerturbed, AbsProduct, GajdaMulti>;

struct SymmetricSpec {
  int n = 1;
  int d = 1;
  SymmetricKind kind = ExactMultiadditive{};
};

/// Validates arity/dimension constraints of the constructor. Throws ConfigError.
void validate(const SymmetricSpec& spec);

std::string describe(const SymmetricSpec& spec);

double evaluate_symmetric(const SymmetricSpec& spec, const Tuple& y);

/// D_n g(z) = g(x_1..x_{n-1}, x_n + x_{n+1}) - g(x_1..x_n) - g(x_1..x_{n-1}, x_{n+1}).
double defect(const SymmetricSpec& spec, const Tuple& z);

/// Sum of the magnitudes of the three g-values entering defect(). Used to
/// scale round-off allowances when comparing a defect against a bound.
double defect_magnitude(const SymmetricSpec& spec, const Tuple& z);

}  // namespace hyerslab
