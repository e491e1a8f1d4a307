#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "octacover/attractor.hpp"
#include "octacover/io.hpp"

namespace octacover {

struct PipelineOptions {
  std::size_t order = 1;              // cover order p
  std::size_t sample_iterations = 8;  // deterministic sampling depth
  std::size_t chaos_steps = 0;        // 0 disables the chaos-game pass
  std::size_t chaos_burn_in = 100;
  std::uint64_t chaos_seed = 1;
  std::size_t compose_cap = 1'000'000;
  SampleOptions sampling;
  double slack_rel = 1e-9;  // containment slack, relative to scale
  std::filesystem::path output_dir;  // empty: no files written
};

struct PipelineResult {
  CoverReport report;
  bool containment_ok = false;
  std::filesystem::path report_path;  // empty when not written
  std::filesystem::path mesh_path;
  std::filesystem::path cloud_path;
};

// Build system -> compose to order p -> solve radii -> build cover ->
// sample attractor (and optionally chaos game) -> containment check ->
// write report, mesh, point cloud.
PipelineResult run_pipeline(const DataGrid& grid, const PipelineOptions& opts);

struct BenchRow {
  std::size_t n = 0;
  double top2_ms = 0.0;  // median over repetitions
  double sort_ms = 0.0;
  bool values_match = false;  // top-two values agree with the sort baseline
  std::size_t primary_comparisons = 0;
  std::size_t secondary_comparisons = 0;
};

// Median timing of top2_select vs a full-sort baseline on identical
// random arrays.
std::vector<BenchRow> bench_selection(std::span<const std::size_t> sizes,
                                      std::size_t repetitions,
                                      std::uint64_t seed);

}  // namespace octacover
