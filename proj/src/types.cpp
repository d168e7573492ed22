#include "hyerslab/types.hpp"

#include <cmath>
#include <sstream>

namespace hyerslab {

double norm(const Point& x) {
  if (x.size() == 1) return std::fabs(x[0]);
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

double power_norm(const Point& x, double r) {
  const double nx = norm(x);
  if (nx == 0.0) return r <= 0.0 ? 1.0 : 0.0;
  return std::pow(nx, r);
}

Tuple scale_tuple(const Tuple& y, int e) {
  Tuple out = y;
  for (auto& p : out) {
    for (auto& v : p) {
      v = std::ldexp(v, e);
      if (!(std::fabs(v) <= 0x1.0p500)) {
        std::ostringstream msg;
        msg << "dyadic rescaling by 2^" << e << " leaves the supported range |x| <= 2^500";
        throw RangeError(msg.str());
      }
    }
  }
  return out;
}

void check_tuple(const Tuple& y, std::size_t length, std::size_t d, const char* what) {
  if (y.size() != length) {
    std::ostringstream msg;
    msg << what << ": expected " << length << " points, got " << y.size();
    throw ConfigError(msg.str());
  }
  for (const auto& p : y) {
    if (p.size() != d) {
      std::ostringstream msg;
      msg << what << ": expected points of dimension " << d << ", got " << p.size();
      throw ConfigError(msg.str());
    }
    for (double v : p) {
      if (!std::isfinite(v)) throw ConfigError(std::string(what) + ": non-finite coordinate");
    }
  }
}

}  // namespace hyerslab
