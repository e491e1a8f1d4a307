#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "octacover/compose.hpp"
#include "octacover/geometry.hpp"
#include "octacover/grid.hpp"

namespace octacover {

enum class SampleMethod { deterministic, chaos_game };

struct PointCloud {
  std::vector<Point3> points;
  std::size_t generation = 0;  // iteration count or chaos-game step count
  SampleMethod method = SampleMethod::deterministic;
  bool truncated = false;  // set when a step hit the point cap
};

struct SampleOptions {
  // Deduplication grid resolution, relative to the system scale.
  double eps_rel = 1e-6;
  // Max points kept per step; beyond it the cloud is thinned
  // deterministically (by hash rank of the dedup cell key) and the result
  // is flagged truncated.
  std::size_t cap = 1'000'000;
};

// The (n+1)*(m+1) data nodes (x_k, y_l, z[k][l]); they lie on the surface,
// so every Hutchinson iterate of this seed stays on the surface exactly.
PointCloud data_grid_cloud(const DataGrid& grid);

// One application of the collage operator: {F(u) : F in system, u in cloud},
// deduplicated on the eps-grid, truncated at opts.cap.
PointCloud hutchinson_step(const SystemRef& system, const PointCloud& cloud,
                           const SampleOptions& opts = {});

// iterations applications of hutchinson_step.
PointCloud sample_attractor(const SystemRef& system, std::size_t iterations,
                            const PointCloud& seed,
                            const SampleOptions& opts = {});

// Random-map iteration u <- F_random(u) from the first map's fixed point
// (a data corner), uniform map choice, discarding the first burn_in points.
// Deterministic for a given rng_seed. Requires steps > burn_in.
PointCloud chaos_game(const SystemRef& system, std::size_t steps,
                      std::size_t burn_in, std::uint64_t rng_seed);

}  // namespace octacover
