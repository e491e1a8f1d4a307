#include "octacover/attractor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "octacover/errors.hpp"

namespace octacover {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Deterministic set of points keyed by their dedup-grid cell. When the cap
// is exceeded, the points with the `cap` smallest cell-key hashes are kept,
// so the kept set does not depend on insertion order; emission order is
// first-insertion order.
class Dedup {
  public:
    explicit Dedup(std::size_t cap)
        : cap_(std::max<std::size_t>(cap, 1)),
          limit_(cap_ + std::max<std::size_t>(cap_, 1 << 16)) {}

    void offer(const Point3& p, double inv_eps) {
        const auto ix = std::uint64_t(std::llround(p.x * inv_eps));
        const auto iy = std::uint64_t(std::llround(p.y * inv_eps));
        const auto iz = std::uint64_t(std::llround(p.z * inv_eps));
        std::uint64_t k1 = splitmix64(splitmix64(splitmix64(ix) ^ iy) ^ iz);
        const std::uint64_t k2 =
            splitmix64(splitmix64(splitmix64(iz + 0x6A09E667F3BCC909ULL) ^ iy) ^
                       ix);
        if ((k1 | k2) == 0) k1 = 1;  // (0,0) marks an empty table slot
        const std::uint64_t h = splitmix64(k1 ^ (k2 * 0x2545F4914F6CDD1DULL));
        if (thresholded_ && h >= threshold_) return;

        std::size_t pos = h & mask_;
        while (true) {
            const std::uint32_t slot = table_[pos];
            if (slot == kEmpty) break;
            const Entry& e = kept_[slot];
            if (e.k1 == k1 && e.k2 == k2) return;  // duplicate cell
            pos = (pos + 1) & mask_;
        }
        table_[pos] = std::uint32_t(kept_.size());
        kept_.push_back({k1, k2, h, p});
        if (2 * kept_.size() > table_.size()) grow();
        if (kept_.size() > cap_) {
            truncated_ = true;
            if (kept_.size() >= limit_) compact();
        }
    }

    bool truncated() const { return truncated_; }

    std::vector<Point3> extract() {
        if (kept_.size() > cap_) compact();
        std::vector<Point3> out;
        out.reserve(kept_.size());
        for (const Entry& e : kept_) out.push_back(e.p);
        return out;
    }

  private:
    struct Entry {
        std::uint64_t k1, k2, h;
        Point3 p;
    };
    static constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

    void grow() {
        table_.assign(table_.size() * 2, kEmpty);
        mask_ = table_.size() - 1;
        rebuild();
    }

    void rebuild() {
        for (std::uint32_t i = 0; i < kept_.size(); ++i) {
            std::size_t pos = kept_[i].h & mask_;
            while (table_[pos] != kEmpty) pos = (pos + 1) & mask_;
            table_[pos] = i;
        }
    }

    // Keep the cap_ entries with the smallest hashes, preserving insertion
    // order; later candidates at or above the resulting threshold can never
    // re-enter the best-cap_ set and are skipped up front.
    void compact() {
        std::vector<std::uint64_t> hs;
        hs.reserve(kept_.size());
        for (const Entry& e : kept_) hs.push_back(e.h);
        std::nth_element(hs.begin(), hs.begin() + (cap_ - 1), hs.end());
        const std::uint64_t t = hs[cap_ - 1];

        std::size_t below = 0;
        for (const Entry& e : kept_)
            if (e.h < t) ++below;
        std::size_t at_quota = cap_ - below;
        std::vector<Entry> next;
        next.reserve(cap_);
        for (const Entry& e : kept_) {
            if (e.h < t) {
                next.push_back(e);
            } else if (e.h == t && at_quota > 0) {
                next.push_back(e);
                --at_quota;
            }
        }
        kept_ = std::move(next);
        threshold_ = t;
        thresholded_ = true;
        std::fill(table_.begin(), table_.end(), kEmpty);
        rebuild();
    }

    std::size_t cap_, limit_;
    bool truncated_ = false;
    bool thresholded_ = false;
    std::uint64_t threshold_ = 0;
    std::vector<Entry> kept_;
    std::vector<std::uint32_t> table_ = std::vector<std::uint32_t>(1024, kEmpty);
    std::size_t mask_ = 1023;
};

}  // namespace

PointCloud data_grid_cloud(const DataGrid& grid) {
    check_shape(grid);
    PointCloud cloud;
    cloud.points.reserve(grid.x.size() * grid.y.size());
    for (std::size_t k = 0; k < grid.x.size(); ++k)
        for (std::size_t l = 0; l < grid.y.size(); ++l)
            cloud.points.push_back({grid.x[k], grid.y[l], grid.z[k][l]});
    return cloud;
}

PointCloud hutchinson_step(const SystemRef& system, const PointCloud& cloud,
                           const SampleOptions& opts) {
    if (cloud.points.empty()) throw Error("point cloud must be nonempty");
    if (!(opts.eps_rel > 0.0))
        throw Error("dedup resolution eps_rel must be positive");
    const double inv_eps = 1.0 / (opts.eps_rel * system.scale);

    Dedup dedup(opts.cap);
    for (const IfsMap& map : system.maps)
        for (const Point3& u : cloud.points)
            dedup.offer(map.coeffs.apply(u), inv_eps);

    PointCloud out;
    out.points = dedup.extract();
    out.generation = cloud.generation + 1;
    out.method = cloud.method;
    out.truncated = cloud.truncated || dedup.truncated();
    return out;
}

PointCloud sample_attractor(const SystemRef& system, std::size_t iterations,
                            const PointCloud& seed,
                            const SampleOptions& opts) {
    PointCloud cloud = seed;
    for (std::size_t it = 0; it < iterations; ++it)
        cloud = hutchinson_step(system, cloud, opts);
    return cloud;
}

PointCloud chaos_game(const SystemRef& system, std::size_t steps,
                      std::size_t burn_in, std::uint64_t rng_seed) {
    if (!(steps > burn_in)) throw Error("steps must exceed burn_in");
    const std::size_t N = system.maps.size();
    if (N == 0) throw TooFewMaps(std::size_t{0});

    PointCloud out;
    out.method = SampleMethod::chaos_game;
    out.generation = steps;
    out.points.reserve(steps - burn_in);

    // splitmix64 stream + modulo keeps the sequence identical across
    // standard libraries; bias is irrelevant for coverage sampling.
    std::uint64_t state = rng_seed;
    Point3 u = system.maps[0].fixed_pt;  // a corner data node
    for (std::size_t s = 0; s < steps; ++s) {
        state = splitmix64(state);
        u = system.maps[state % N].coeffs.apply(u);
        if (s >= burn_in) out.points.push_back(u);
    }
    return out;
}

}  // namespace octacover
