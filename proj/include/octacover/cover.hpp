#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "octacover/compose.hpp"
#include "octacover/geometry.hpp"

namespace octacover {

struct Top2 {
  std::size_t primary = 0;    // argmax, first occurrence on ties
  std::size_t secondary = 0;  // argmax over the remaining indices
};

struct SelectionCounts {
  std::size_t primary_comparisons = 0;
  std::size_t secondary_comparisons = 0;
};

// Single-pass top-two selection, N-1 primary comparisons and at most N-1
// secondary comparisons. Throws TooFewMaps when values.size() < 2.
Top2 top2_select(std::span<const double> values,
                 SelectionCounts* counts = nullptr);

enum class DiameterMethod {
  sign_patterns,  // O(N): 4 sign patterns over w = (x, y, theta*z)
  brute_force     // O(N^2) reference
};

// Exact max of rho over all pairs (0 for a single point).
double max_pairwise_distance(
    std::span<const Point3> points, const ScaledTaxicabMetric& metric,
    DiameterMethod method = DiameterMethod::sign_patterns);

// Solution of the radius system: rho_i = c_i * (M + max_{j != i} rho_j),
// closed form through the two largest constants.
struct RadiusSolution {
  std::size_t primary_index = 0;    // i'
  std::size_t secondary_index = 0;  // i''
  double diameter = 0.0;            // M, max pairwise rho over fixed points
  std::vector<double> radii;        // one per map
};

// radii[i'] = M*c_{i'}*(1 + c_{i''}) / (1 - c_{i'}*c_{i''})
// radii[i]  = M*c_i   *(1 + c_{i'}) / (1 - c_{i'}*c_{i''})   (i != i')
// Throws TooFewMaps when the system has fewer than two maps.
RadiusSolution cover_radii(const SystemRef& system);

// Closed rho-ball: {u : |dx| + |dy| + theta*|dz| <= radius}.
struct Octahedron {
  Point3 center;
  double radius = 0.0;

  // V1..V6: center +- radius along x, +- radius along y,
  // +- radius/theta along z.
  std::array<Point3, 6> vertices(const ScaledTaxicabMetric& metric) const;

  bool contains(const Point3& pt, const ScaledTaxicabMetric& metric,
                double slack = 0.0) const {
    return metric.rho(center, pt) <= radius + slack;
  }
};

struct OctahedronCover {
  std::size_t order = 1;
  std::vector<Octahedron> octahedra;  // one per map, same order as maps
  ScaledTaxicabMetric metric;
  double scale = 0.0;
};

// One ball per map, centered at its fixed point with its solved radius.
OctahedronCover build_cover(const SystemRef& system);

// Linear-scan membership: true iff some octahedron contains pt with slack.
bool cover_contains(const OctahedronCover& cover, const Point3& pt,
                    double slack = 0.0);

// xy-bucket accelerator for batch membership queries against large covers.
// Exact: falls back to the linear scan when the query leaves the indexed
// region or the slack exceeds the pad the buckets were built with.
class CoverIndex {
 public:
  explicit CoverIndex(const OctahedronCover& cover, double pad = 0.0);

  bool contains(const Point3& pt, double slack = 0.0) const;

 private:
  const OctahedronCover* cover_;
  double pad_;
  double x0_ = 0.0, y0_ = 0.0, cell_ = 1.0;
  std::size_t nx_ = 0, ny_ = 0;
  std::vector<std::uint32_t> entries_;  // octahedron indices, cell-grouped
  std::vector<std::uint32_t> starts_;   // per-cell offsets into entries_
};

}  // namespace octacover
