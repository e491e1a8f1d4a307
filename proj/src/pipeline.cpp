#include "octacover/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include "octacover/cover.hpp"

namespace octacover {
namespace {

// Exact shortfall of the best ball for a point outside the cover.
double point_excess(const OctahedronCover& cover, const Point3& pt) {
    double best = std::numeric_limits<double>::infinity();
    for (const Octahedron& o : cover.octahedra)
        best = std::min(best, cover.metric.rho(o.center, pt) - o.radius);
    return best;
}

void check_points(const OctahedronCover& cover, const CoverIndex& index,
                  const std::vector<Point3>& pts, double slack,
                  ContainmentSummary& summary) {
    for (const Point3& pt : pts) {
        ++summary.points_tested;
        if (!index.contains(pt, slack)) {
            ++summary.failures;
            summary.max_excess =
                std::max(summary.max_excess, point_excess(cover, pt));
        }
    }
}

}  // namespace

PipelineResult run_pipeline(const DataGrid& grid,
                            const PipelineOptions& opts) {
    const IfsSystem base = build_system(grid);
    ComposeOptions copts;
    copts.cap = opts.compose_cap;
    const ComposedSystem system = compose_system(base, opts.order, copts);
    const RadiusSolution solution = cover_radii(system);
    const OctahedronCover cover = build_cover(system);

    const PointCloud cloud = sample_attractor(
        base, opts.sample_iterations, data_grid_cloud(grid), opts.sampling);

    const double slack = opts.slack_rel * base.scale;
    const CoverIndex index(cover, std::max(slack, 1e-6 * base.scale));

    ContainmentSummary summary;
    summary.slack = slack;
    check_points(cover, index, cloud.points, slack, summary);
    if (opts.chaos_steps > 0) {
        const PointCloud chaos = chaos_game(base, opts.chaos_steps,
                                            opts.chaos_burn_in,
                                            opts.chaos_seed);
        check_points(cover, index, chaos.points, slack, summary);
    }

    PipelineResult result;
    result.report = make_cover_report(system, solution, cover, summary);
    result.containment_ok = summary.failures == 0;

    if (!opts.output_dir.empty()) {
        std::filesystem::create_directories(opts.output_dir);
        result.report_path = opts.output_dir / "cover_report.json";
        result.mesh_path = opts.output_dir / "cover.obj";
        result.cloud_path = opts.output_dir / "surface.xyz";
        atomic_write(result.report_path, render_report(result.report));
        write_cover_obj(result.mesh_path, cover);
        write_cloud_xyz(result.cloud_path, cloud);
    }
    return result;
}

std::vector<BenchRow> bench_selection(std::span<const std::size_t> sizes,
                                      std::size_t repetitions,
                                      std::uint64_t seed) {
    using clock = std::chrono::steady_clock;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    std::vector<BenchRow> rows;
    for (const std::size_t n : sizes) {
        if (n < 2) continue;
        BenchRow row;
        row.n = n;
        row.values_match = true;
        std::vector<double> top2_ms, sort_ms;
        std::vector<double> values(n);
        std::vector<double> sorted(n);
        for (std::size_t rep = 0; rep < std::max<std::size_t>(repetitions, 1);
             ++rep) {
            for (double& v : values) v = uni(rng);

            SelectionCounts counts;
            auto t0 = clock::now();
            const Top2 top = top2_select(values, &counts);
            auto t1 = clock::now();
            sorted = values;
            std::sort(sorted.begin(), sorted.end());
            auto t2 = clock::now();

            top2_ms.push_back(
                std::chrono::duration<double, std::milli>(t1 - t0).count());
            sort_ms.push_back(
                std::chrono::duration<double, std::milli>(t2 - t1).count());
            row.primary_comparisons = counts.primary_comparisons;
            row.secondary_comparisons = counts.secondary_comparisons;
            if (values[top.primary] != sorted[n - 1] ||
                values[top.secondary] != sorted[n - 2])
                row.values_match = false;
        }
        const auto median = [](std::vector<double>& v) {
            std::sort(v.begin(), v.end());
            return v[v.size() / 2];
        };
        row.top2_ms = median(top2_ms);
        row.sort_ms = median(sort_ms);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace octacover
