#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "octacover/geometry.hpp"
#include "octacover/grid.hpp"

namespace octacover {

// One map of the system:
//   F(x,y,z) = (a*x + b, c*y + d, e*x + f*y + g*z + alpha*x*y + beta).
// The x and y rows contract the domain rectangle onto the (k,l) subrectangle;
// the z row interpolates the four corner values of that subrectangle.
struct MapCoefficients {
  double a = 0.0, b = 0.0;
  double c = 0.0, d = 0.0;
  double e = 0.0, f = 0.0, g = 0.0, alpha = 0.0, beta = 0.0;

  Point3 apply(const Point3& u) const {
    return {a * u.x + b, c * u.y + d,
            e * u.x + f * u.y + g * u.z + alpha * u.x * u.y + beta};
  }
};

// Residuals of the four corner values of cell (k,l) against the scaled
// global corners; they determine e, f, alpha, beta.
//   p = z[k][l]     - g*z[n][m]
//   q = z[k-1][l]   - g*z[0][m]
//   r = z[k][l-1]   - g*z[n][0]
//   t = z[k-1][l-1] - g*z[0][0]
struct CornerResiduals {
  double p = 0.0, q = 0.0, r = 0.0, t = 0.0;
};

// k in 1..n, l in 1..m (cell indices; data nodes are 0-based).
CornerResiduals corner_residuals(const DataGrid& grid, std::size_t k,
                                 std::size_t l);

// Closed-form coefficients of the map for cell (k,l), k in 1..n, l in 1..m.
MapCoefficients compute_coefficients(const DataGrid& grid, std::size_t k,
                                     std::size_t l);

// Chooses theta = min(theta1, theta2) with
//   theta1 = (1 - max_k a) / (2 * max_{k,l} (|e| + delta*|alpha|))
//   theta2 = (1 - max_l c) / (2 * max_{k,l} (|f| + delta*|alpha|))
// and a directional factor of 1 when its denominator vanishes (e, alpha or
// f, alpha all zero). The domain box fields are left zero; build_system
// fills them from the grid.
ScaledTaxicabMetric compute_theta(std::span<const MapCoefficients> all_coeffs,
                                  double delta);

// C = max{a + theta*(|e| + delta*|alpha|),
//         c + theta*(|f| + delta*|alpha|), |g|}.
// Lipschitz bound of the map under rho on the domain box.
// Throws ContractionNotStrict if C >= 1.
double contraction_constant(const MapCoefficients& coeffs,
                            const ScaledTaxicabMetric& metric);

// Unique fixed point: gx = b/(1-a), gy = d/(1-c),
// gz = (e*gx + f*gy + alpha*gx*gy + beta) / (1-g).
Point3 fixed_point(const MapCoefficients& coeffs);

struct IfsMap {
  MapCoefficients coeffs;
  double contraction = 0.0;
  Point3 fixed_pt;
  std::size_t k = 0, l = 0;  // cell of the (outermost) factor, 1-based
};

// Base system over the grid; maps stored row-major: index (k-1)*m + (l-1).
struct IfsSystem {
  std::vector<IfsMap> maps;
  ScaledTaxicabMetric metric;
  double scale = 0.0;  // max of x-extent, y-extent, z-range, delta
  std::size_t n = 0, m = 0;
};

// Validates the grid, builds all n*m maps, the metric, contraction
// constants and fixed points.
IfsSystem build_system(const DataGrid& grid);

}  // namespace octacover
