#pragma once

#include <cmath>
#include <cstdint>

#include "octacover/io.hpp"

namespace testutil {

inline octacover::DataGrid load_example1() {
    return octacover::parse_grid(OCTACOVER_DATA_DIR "/example1.grid");
}

inline octacover::DataGrid load_example2() {
    return octacover::parse_grid(OCTACOVER_DATA_DIR "/example2.grid");
}

// |a-b| <= tol * max(1, |a|, |b|)
inline bool rel_close(double a, double b, double tol) {
    const double mag = std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
    return std::fabs(a - b) <= tol * mag;
}

// Deterministic generator independent of the standard library's
// distributions, so expected values can be pinned across toolchains.
class TestRng {
  public:
    explicit TestRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

  private:
    std::uint64_t state_;
};

}  // namespace testutil
