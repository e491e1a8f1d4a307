#pragma once

#include <cmath>

namespace octacover {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

constexpr bool operator==(const Point3& a, const Point3& b) {
  return a.x == b.x && a.y == b.y && a.z == b.z;
}

// rho((x,y,z),(x',y',z')) = |x-x'| + |y-y'| + theta*|z-z'|.
// theta is derived from the map coefficients so every map of the system is a
// strict contraction under rho; delta bounds the magnitude of the domain box
// corners and enters the contraction estimate of the bilinear term.
struct ScaledTaxicabMetric {
  double theta = 1.0;
  double theta1 = 1.0;  // x-direction bound; theta = min(theta1, theta2)
  double theta2 = 1.0;  // y-direction bound
  double delta = 0.0;   // max{|x_lo|, |x_hi|, |y_lo|, |y_hi|}
  double x_lo = 0.0, x_hi = 0.0;  // domain box
  double y_lo = 0.0, y_hi = 0.0;

  double rho(const Point3& a, const Point3& b) const {
    return std::fabs(a.x - b.x) + std::fabs(a.y - b.y) +
           theta * std::fabs(a.z - b.z);
  }
};

}  // namespace octacover
