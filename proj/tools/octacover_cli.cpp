// Command-line front end: validate grids, print map coefficients, build
// octahedron covers with containment verification, sample the interpolation
// surface, and benchmark top-two selection.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "octacover/pipeline.hpp"

namespace {

using namespace octacover;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;      // parse or validation failure
constexpr int kExitContainment = 2;  // sampled points escaped the cover
constexpr int kExitResources = 3;    // composition cap exceeded

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int cmd_validate(const std::string& grid_path) {
    const DataGrid grid = parse_grid(grid_path);
    std::printf("ok: %zu x %zu subrectangles (%zu x %zu nodes), scale %s\n",
                grid.n(), grid.m(), grid.n() + 1, grid.m() + 1,
                fmt17(grid.scale()).c_str());
    return kExitOk;
}

int cmd_coeffs(const std::string& grid_path) {
    const DataGrid grid = parse_grid(grid_path);
    const IfsSystem sys = build_system(grid);
    std::printf("theta %s (theta1 %s, theta2 %s), delta %s\n",
                fmt17(sys.metric.theta).c_str(),
                fmt17(sys.metric.theta1).c_str(),
                fmt17(sys.metric.theta2).c_str(),
                fmt17(sys.metric.delta).c_str());
    for (const IfsMap& map : sys.maps) {
        std::printf("map k=%zu l=%zu\n", map.k, map.l);
        std::printf("  a %s  b %s\n", fmt17(map.coeffs.a).c_str(),
                    fmt17(map.coeffs.b).c_str());
        std::printf("  c %s  d %s\n", fmt17(map.coeffs.c).c_str(),
                    fmt17(map.coeffs.d).c_str());
        std::printf("  e %s  f %s  g %s\n", fmt17(map.coeffs.e).c_str(),
                    fmt17(map.coeffs.f).c_str(), fmt17(map.coeffs.g).c_str());
        std::printf("  alpha %s  beta %s\n", fmt17(map.coeffs.alpha).c_str(),
                    fmt17(map.coeffs.beta).c_str());
        std::printf("  contraction %s  fixed point [%s, %s, %s]\n",
                    fmt17(map.contraction).c_str(),
                    fmt17(map.fixed_pt.x).c_str(),
                    fmt17(map.fixed_pt.y).c_str(),
                    fmt17(map.fixed_pt.z).c_str());
    }
    return kExitOk;
}

int run_cover(const std::string& grid_path, const PipelineOptions& opts,
              bool quiet_files) {
    const DataGrid grid = parse_grid(grid_path);
    const PipelineResult result = run_pipeline(grid, opts);
    const auto& c = result.report.containment;
    std::printf("order %zu: %zu octahedra, max radius %s\n",
                result.report.order, result.report.maps.size(),
                fmt17([&] {
                    double r = 0;
                    for (const auto& rec : result.report.maps)
                        r = std::max(r, rec.radius);
                    return r;
                }()).c_str());
    std::printf("containment: %zu points tested, %zu failures (slack %s)\n",
                c.points_tested, c.failures, fmt17(c.slack).c_str());
    if (!quiet_files && !result.report_path.empty()) {
        std::printf("wrote %s\n", result.report_path.string().c_str());
        std::printf("wrote %s\n", result.mesh_path.string().c_str());
        std::printf("wrote %s\n", result.cloud_path.string().c_str());
    }
    return result.containment_ok ? kExitOk : kExitContainment;
}

int cmd_sample(const std::string& grid_path, std::size_t iters, bool chaos,
               std::size_t steps, std::size_t burn_in, std::uint64_t seed,
               const SampleOptions& sopts, const std::string& out_path) {
    const DataGrid grid = parse_grid(grid_path);
    const IfsSystem sys = build_system(grid);
    PointCloud cloud;
    if (chaos) {
        cloud = chaos_game(sys, steps, burn_in, seed);
    } else {
        cloud = sample_attractor(sys, iters, data_grid_cloud(grid), sopts);
    }
    if (out_path.empty()) {
        std::fputs(render_cloud_xyz(cloud).c_str(), stdout);
    } else {
        write_cloud_xyz(out_path, cloud);
        std::printf("wrote %zu points to %s%s\n", cloud.points.size(),
                    out_path.c_str(), cloud.truncated ? " (truncated)" : "");
    }
    return kExitOk;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::size_t reps,
              std::uint64_t seed) {
    const auto rows = bench_selection(sizes, reps, seed);
    std::printf("%12s %14s %14s %10s %12s %12s\n", "n", "top2_ms", "sort_ms",
                "match", "primary_cmp", "secondary_cmp");
    for (const BenchRow& row : rows)
        std::printf("%12zu %14.4f %14.4f %10s %12zu %12zu\n", row.n,
                    row.top2_ms, row.sort_ms, row.values_match ? "yes" : "NO",
                    row.primary_comparisons, row.secondary_comparisons);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Fractal interpolation surfaces: build the iterated function system "
        "of a rectangular data grid, cover its attractor with octahedrons, "
        "and verify the cover against sampled surface points."};
    app.require_subcommand(1);

    std::string grid_path;
    PipelineOptions popts;
    SampleOptions sopts;
    std::string out_dir;
    std::string out_file;
    bool chaos = false;
    std::size_t steps = 100000, burn_in = 100;
    std::uint64_t seed = 1;
    std::vector<std::size_t> bench_sizes{1000, 10000, 100000, 1000000};
    std::size_t bench_reps = 5;

    auto* validate = app.add_subcommand("validate", "Parse and validate a grid file");
    validate->add_option("grid", grid_path, "grid file")->required();

    auto* coeffs = app.add_subcommand("coeffs", "Print map coefficients, contraction constants and fixed points");
    coeffs->add_option("grid", grid_path, "grid file")->required();

    auto* cover = app.add_subcommand("cover", "Build the order-p cover, verify containment, write report/mesh/cloud");
    cover->add_option("grid", grid_path, "grid file")->required();
    cover->add_option("--order", popts.order, "composition order p")->capture_default_str();
    cover->add_option("--iters", popts.sample_iterations, "deterministic sampling iterations")->capture_default_str();
    cover->add_option("--chaos-steps", popts.chaos_steps, "extra chaos-game verification steps (0 disables)")->capture_default_str();
    cover->add_option("--cap", popts.compose_cap, "max composed maps")->capture_default_str();
    cover->add_option("--sample-cap", popts.sampling.cap, "max sampled points per step")->capture_default_str();
    cover->add_option("--eps-rel", popts.sampling.eps_rel, "dedup resolution relative to scale")->capture_default_str();
    cover->add_option("--slack-rel", popts.slack_rel, "containment slack relative to scale")->capture_default_str();
    cover->add_option("--out", out_dir, "output directory for report, mesh and point cloud");

    auto* check = app.add_subcommand("check", "Containment verdict only; no files written");
    check->add_option("grid", grid_path, "grid file")->required();
    check->add_option("--order", popts.order, "composition order p")->capture_default_str();
    check->add_option("--iters", popts.sample_iterations, "deterministic sampling iterations")->capture_default_str();
    check->add_option("--chaos-steps", popts.chaos_steps, "extra chaos-game verification steps (0 disables)")->capture_default_str();
    check->add_option("--cap", popts.compose_cap, "max composed maps")->capture_default_str();
    check->add_option("--sample-cap", popts.sampling.cap, "max sampled points per step")->capture_default_str();
    check->add_option("--eps-rel", popts.sampling.eps_rel, "dedup resolution relative to scale")->capture_default_str();
    check->add_option("--slack-rel", popts.slack_rel, "containment slack relative to scale")->capture_default_str();

    auto* sample = app.add_subcommand("sample", "Sample the surface to an XYZ point cloud");
    sample->add_option("grid", grid_path, "grid file")->required();
    sample->add_option("--iters", popts.sample_iterations, "deterministic iterations")->capture_default_str();
    sample->add_flag("--chaos", chaos, "use the chaos game instead of deterministic iteration");
    sample->add_option("--steps", steps, "chaos-game steps")->capture_default_str();
    sample->add_option("--burn-in", burn_in, "chaos-game points discarded up front")->capture_default_str();
    sample->add_option("--seed", seed, "chaos-game RNG seed")->capture_default_str();
    sample->add_option("--sample-cap", sopts.cap, "max points per step")->capture_default_str();
    sample->add_option("--eps-rel", sopts.eps_rel, "dedup resolution relative to scale")->capture_default_str();
    sample->add_option("--out", out_file, "output file (default: stdout)");

    auto* bench = app.add_subcommand("bench", "Time top-two selection against a full sort");
    bench->add_option("--sizes", bench_sizes, "array sizes")->capture_default_str();
    bench->add_option("--reps", bench_reps, "repetitions per size")->capture_default_str();
    bench->add_option("--seed", seed, "RNG seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // app.exit prints the message (or the help text); fold every usage
        // error into the invalid-input exit code, keeping 0 for --help.
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (validate->parsed()) return cmd_validate(grid_path);
        if (coeffs->parsed()) return cmd_coeffs(grid_path);
        if (cover->parsed()) {
            popts.output_dir = out_dir;
            return run_cover(grid_path, popts, false);
        }
        if (check->parsed()) {
            popts.output_dir.clear();
            return run_cover(grid_path, popts, true);
        }
        if (sample->parsed())
            return cmd_sample(grid_path, popts.sample_iterations, chaos, steps,
                              burn_in, seed, sopts, out_file);
        if (bench->parsed()) return cmd_bench(bench_sizes, bench_reps, seed);
    } catch (const SystemTooLarge& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitResources;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalid;
    }
    return kExitOk;
}
