#include "octacover/cover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "octacover/errors.hpp"

namespace octacover {

Top2 top2_select(std::span<const double> values, SelectionCounts* counts) {
    const std::size_t N = values.size();
    if (N < 2) throw TooFewMaps(N);
    SelectionCounts local;
    SelectionCounts& cnt = counts ? *counts : local;
    cnt = {};

    std::size_t i1 = 0, i2 = 0;
    bool have2 = false;
    for (std::size_t i = 1; i < N; ++i) {
        ++cnt.primary_comparisons;
        if (values[i] > values[i1]) {
            // The old maximum becomes the runner-up.
            i2 = i1;
            have2 = true;
            i1 = i;
        } else {
            ++cnt.secondary_comparisons;
            if (!have2 || values[i] > values[i2]) {
                i2 = i;
                have2 = true;
            }
        }
    }
    return {i1, i2};
}

namespace {

double brute_force_diameter(std::span<const Point3> pts,
                            const ScaledTaxicabMetric& metric) {
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best = std::max(best, metric.rho(pts[i], pts[j]));
    return best;
}

}  // namespace

double max_pairwise_distance(std::span<const Point3> pts,
                             const ScaledTaxicabMetric& metric,
                             DiameterMethod method) {
    if (pts.size() < 2) return 0.0;
    if (method == DiameterMethod::brute_force)
        return brute_force_diameter(pts, metric);

    // rho(u,v) = max over sign choices s of s.(w(u) - w(v)) with
    // w = (x, y, theta*z); fixing the x sign leaves 4 patterns. The extreme
    // pair of the winning pattern realizes the diameter; rho is re-evaluated
    // on the four candidate pairs so the result is the same floating-point
    // value the brute force computes.
    const double sy[4] = {1.0, 1.0, -1.0, -1.0};
    const double sz[4] = {1.0, -1.0, 1.0, -1.0};
    std::size_t arg_lo[4], arg_hi[4];
    double lo[4], hi[4];
    for (int s = 0; s < 4; ++s) {
        lo[s] = std::numeric_limits<double>::infinity();
        hi[s] = -std::numeric_limits<double>::infinity();
        arg_lo[s] = arg_hi[s] = 0;
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double wx = pts[i].x, wy = pts[i].y,
                     wz = metric.theta * pts[i].z;
        for (int s = 0; s < 4; ++s) {
            const double v = wx + sy[s] * wy + sz[s] * wz;
            if (v < lo[s]) {
                lo[s] = v;
                arg_lo[s] = i;
            }
            if (v > hi[s]) {
                hi[s] = v;
                arg_hi[s] = i;
            }
        }
    }
    double best = 0.0;
    for (int s = 0; s < 4; ++s)
        best = std::max(best, metric.rho(pts[arg_hi[s]], pts[arg_lo[s]]));
    return best;
}

RadiusSolution cover_radii(const SystemRef& system) {
    const std::size_t N = system.maps.size();
    if (N < 2) throw TooFewMaps(N);

    std::vector<double> cs(N);
    for (std::size_t i = 0; i < N; ++i) cs[i] = system.maps[i].contraction;
    const Top2 top = top2_select(cs);

    std::vector<Point3> centers(N);
    for (std::size_t i = 0; i < N; ++i) centers[i] = system.maps[i].fixed_pt;

    RadiusSolution sol;
    sol.primary_index = top.primary;
    sol.secondary_index = top.secondary;
    sol.diameter = max_pairwise_distance(centers, *system.metric);

    const double c1 = cs[top.primary], c2 = cs[top.secondary];
    const double den = 1.0 - c1 * c2;
    sol.radii.resize(N);
    for (std::size_t i = 0; i < N; ++i)
        sol.radii[i] = sol.diameter * cs[i] * (1.0 + c1) / den;
    sol.radii[top.primary] = sol.diameter * c1 * (1.0 + c2) / den;
    return sol;
}

std::array<Point3, 6> Octahedron::vertices(
    const ScaledTaxicabMetric& metric) const {
    const double rz = radius / metric.theta;
    return {{{center.x + radius, center.y, center.z},
             {center.x - radius, center.y, center.z},
             {center.x, center.y + radius, center.z},
             {center.x, center.y - radius, center.z},
             {center.x, center.y, center.z + rz},
             {center.x, center.y, center.z - rz}}};
}

OctahedronCover build_cover(const SystemRef& system) {
    const RadiusSolution sol = cover_radii(system);
    OctahedronCover cover;
    cover.order = system.order;
    cover.metric = *system.metric;
    cover.scale = system.scale;
    cover.octahedra.resize(system.maps.size());
    for (std::size_t i = 0; i < system.maps.size(); ++i)
        cover.octahedra[i] = {system.maps[i].fixed_pt, sol.radii[i]};
    return cover;
}

bool cover_contains(const OctahedronCover& cover, const Point3& pt,
                    double slack) {
    for (const Octahedron& o : cover.octahedra)
        if (o.contains(pt, cover.metric, slack)) return true;
    return false;
}

CoverIndex::CoverIndex(const OctahedronCover& cover, double pad)
    : cover_(&cover), pad_(pad) {
    const auto& os = cover.octahedra;
    if (os.empty()) return;

    double rmax = 0.0;
    double minx = os[0].center.x, maxx = minx;
    double miny = os[0].center.y, maxy = miny;
    for (const Octahedron& o : os) {
        rmax = std::max(rmax, o.radius);
        minx = std::min(minx, o.center.x);
        maxx = std::max(maxx, o.center.x);
        miny = std::min(miny, o.center.y);
        maxy = std::max(maxy, o.center.y);
    }
    const double reach = rmax + pad;
    x0_ = minx - reach;
    y0_ = miny - reach;
    const double ex = (maxx + reach) - x0_;
    const double ey = (maxy + reach) - y0_;
    // Cells at least one max reach wide: each octahedron then lands in at
    // most a 3x3 block, and a query only needs its own cell.
    cell_ = std::max(std::max(reach, 1e-300),
                     std::max(ex, ey) / 1024.0);
    nx_ = std::size_t(ex / cell_) + 1;
    ny_ = std::size_t(ey / cell_) + 1;

    const auto cell_of = [this](double v, double origin, std::size_t count) {
        const double f = (v - origin) / cell_;
        if (f <= 0.0) return std::size_t{0};
        const auto c = std::size_t(f);
        return c >= count ? count - 1 : c;
    };

    starts_.assign(nx_ * ny_ + 1, 0);
    const auto for_cells = [&](const Octahedron& o, auto&& fn) {
        const double r = o.radius + pad_;
        const std::size_t cx0 = cell_of(o.center.x - r, x0_, nx_);
        const std::size_t cx1 = cell_of(o.center.x + r, x0_, nx_);
        const std::size_t cy0 = cell_of(o.center.y - r, y0_, ny_);
        const std::size_t cy1 = cell_of(o.center.y + r, y0_, ny_);
        for (std::size_t cx = cx0; cx <= cx1; ++cx)
            for (std::size_t cy = cy0; cy <= cy1; ++cy)
                fn(cx * ny_ + cy);
    };
    for (const Octahedron& o : os)
        for_cells(o, [&](std::size_t cell) { ++starts_[cell + 1]; });
    for (std::size_t c = 0; c < nx_ * ny_; ++c) starts_[c + 1] += starts_[c];
    entries_.resize(starts_.back());
    std::vector<std::uint32_t> cursor(starts_.begin(), starts_.end() - 1);
    for (std::uint32_t i = 0; i < os.size(); ++i)
        for_cells(os[i],
                  [&](std::size_t cell) { entries_[cursor[cell]++] = i; });
}

bool CoverIndex::contains(const Point3& pt, double slack) const {
    const auto& os = cover_->octahedra;
    if (os.empty()) return false;
    if (slack > pad_ || nx_ == 0)
        return cover_contains(*cover_, pt, slack);

    const double fx = (pt.x - x0_) / cell_;
    const double fy = (pt.y - y0_) / cell_;
    if (fx < 0.0 || fy < 0.0 || fx >= double(nx_) || fy >= double(ny_))
        return cover_contains(*cover_, pt, slack);  // outside the indexed box

    const std::size_t cell = std::size_t(fx) * ny_ + std::size_t(fy);
    const auto& metric = cover_->metric;
    for (std::uint32_t e = starts_[cell]; e < starts_[cell + 1]; ++e)
        if (os[entries_[e]].contains(pt, metric, slack)) return true;
    return false;
}

}  // namespace octacover
