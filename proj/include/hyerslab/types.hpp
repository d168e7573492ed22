#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyerslab {

/// An element of S = R^d. The scalar case is d = 1.
using Point = std::vector<double>;

/// An ordered list of points; used both for y in S^n and z in S^(n+1).
using Tuple = std::vector<Point>;

enum class Mode { Plus, Minus };

inline const char* to_string(Mode m) { return m == Mode::Plus ? "plus" : "minus"; }

/// Invalid scenario or arity mismatch.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A stated hypothesis (defect bound, difference bound, additivity) was
/// observed to fail.
class ContractViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The stabilizer series of a control diverges for the requested branch.
class DivergentControl : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested r = 1, where power controls give no stability.
class ThresholdError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dyadic rescaling left the representable range.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

double norm(const Point& x);

/// ||x||^r with the convention ||0||^r = 1 for r <= 0.
double power_norm(const Point& x, double r);

/// Returns 2^e * y (every coordinate of every point). Throws RangeError when
/// a coordinate magnitude would exceed 2^500.
Tuple scale_tuple(const Tuple& y, int e);

/// Ensures every point has dimension d and all entries are finite.
void check_tuple(const Tuple& y, std::size_t length, std::size_t d, const char* what);

/// |a - b| <= rel * max(|a|, |b|) with a tiny absolute floor.
inline bool rel_close(double a, double b, double rel) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= rel * scale + 1e-300;
}

}  // namespace hyerslab
