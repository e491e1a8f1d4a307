#include <cmath>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "octacover/compose.hpp"

using namespace octacover;
using testutil::TestRng;
using testutil::rel_close;

namespace {

MapCoefficients random_map(TestRng& rng) {
    MapCoefficients mc;
    mc.a = rng.uniform(-0.9, 0.9);
    mc.b = rng.uniform(-5, 5);
    mc.c = rng.uniform(-0.9, 0.9);
    mc.d = rng.uniform(-5, 5);
    mc.e = rng.uniform(-1, 1);
    mc.f = rng.uniform(-1, 1);
    mc.g = rng.uniform(-0.9, 0.9);
    mc.alpha = rng.uniform(-0.1, 0.1);
    mc.beta = rng.uniform(-5, 5);
    return mc;
}

bool points_close(const Point3& a, const Point3& b, double tol) {
    return rel_close(a.x, b.x, tol) && rel_close(a.y, b.y, tol) &&
           rel_close(a.z, b.z, tol);
}

bool coeffs_close(const MapCoefficients& a, const MapCoefficients& b,
                  double tol) {
    return rel_close(a.a, b.a, tol) && rel_close(a.b, b.b, tol) &&
           rel_close(a.c, b.c, tol) && rel_close(a.d, b.d, tol) &&
           rel_close(a.e, b.e, tol) && rel_close(a.f, b.f, tol) &&
           rel_close(a.g, b.g, tol) && rel_close(a.alpha, b.alpha, tol) &&
           rel_close(a.beta, b.beta, tol);
}

}  // namespace

TEST_CASE("coefficient-space composition equals pointwise composition") {
    TestRng rng(4242);
    for (int pair = 0; pair < 100; ++pair) {
        const MapCoefficients f1 = random_map(rng), f2 = random_map(rng);
        const MapCoefficients comp = compose_pair(f1, f2);
        for (int t = 0; t < 1000; ++t) {
            const Point3 u{rng.uniform(-10, 10), rng.uniform(-10, 10),
                           rng.uniform(-10, 10)};
            const Point3 via_coeffs = comp.apply(u);
            const Point3 via_points = f1.apply(f2.apply(u));
            CHECK(points_close(via_coeffs, via_points, 1e-9));
        }
    }
}

TEST_CASE("first example composition (1,1) after (2,2) in closed form") {
    const IfsSystem sys = build_system(testutil::load_example1());
    const MapCoefficients comp =
        compose_pair(sys.maps[0].coeffs, sys.maps[3].coeffs);
    CHECK(rel_close(comp.a, 0.25, 1e-12));
    CHECK(rel_close(comp.b, 50.0, 1e-12));
    CHECK(rel_close(comp.c, 0.25, 1e-12));
    CHECK(rel_close(comp.d, 50.0, 1e-12));
    CHECK(rel_close(comp.e, 0.0845, 1e-12));
    CHECK(rel_close(comp.f, 0.0505, 1e-12));
    CHECK(rel_close(comp.g, 0.42, 1e-12));
    CHECK(rel_close(comp.alpha, -0.0007125, 1e-12));
    CHECK(rel_close(comp.beta, -28.5, 1e-12));
}

TEST_CASE("a map's fixed point is fixed by its self-composition") {
    for (const DataGrid& g :
         {testutil::load_example1(), testutil::load_example2()}) {
        const IfsSystem sys = build_system(g);
        for (const IfsMap& map : sys.maps) {
            const MapCoefficients twice =
                compose_pair(map.coeffs, map.coeffs);
            const Point3 image = twice.apply(map.fixed_pt);
            CHECK(sys.metric.rho(image, map.fixed_pt) <= 1e-9 * sys.scale);
        }
    }
}

TEST_CASE("composition is associative in coefficient space") {
    TestRng rng(991);
    for (int t = 0; t < 200; ++t) {
        const MapCoefficients A = random_map(rng), B = random_map(rng),
                              C = random_map(rng);
        const MapCoefficients left = compose_pair(compose_pair(A, B), C);
        const MapCoefficients right = compose_pair(A, compose_pair(B, C));
        CHECK(coeffs_close(left, right, 1e-9));
    }
}

TEST_CASE("order one returns the base system unchanged") {
    const IfsSystem base = build_system(testutil::load_example1());
    const ComposedSystem sys = compose_system(base, 1);
    REQUIRE(sys.maps.size() == base.maps.size());
    CHECK(sys.order == 1);
    CHECK(sys.base_count == 4);
    for (std::size_t i = 0; i < base.maps.size(); ++i) {
        CHECK(sys.maps[i].contraction == base.maps[i].contraction);
        CHECK(sys.maps[i].fixed_pt == base.maps[i].fixed_pt);
        CHECK(sys.maps[i].coeffs.a == base.maps[i].coeffs.a);
        CHECK(sys.maps[i].coeffs.beta == base.maps[i].coeffs.beta);
        CHECK(sys.maps[i].k == base.maps[i].k);
        CHECK(sys.maps[i].l == base.maps[i].l);
    }
}

TEST_CASE("composed system counts, constants and fixed points") {
    const IfsSystem base1 = build_system(testutil::load_example1());
    const ComposedSystem p2 = compose_system(base1, 2);
    REQUIRE(p2.maps.size() == 16);

    const IfsSystem base2 = build_system(testutil::load_example2());
    const ComposedSystem p3 = compose_system(base2, 3);
    REQUIRE(p3.maps.size() == 729);

    // Constants are the factor products, bit for bit, and respect the power
    // bound of the top base constant.
    double cmax = 0.0;
    for (const IfsMap& map : base2.maps)
        cmax = std::max(cmax, map.contraction);
    const std::size_t N = base2.maps.size();
    for (std::size_t flat = 0; flat < p3.maps.size(); ++flat) {
        std::size_t digits[3], rest = flat;
        for (std::size_t t = 3; t-- > 0;) {
            digits[t] = rest % N;
            rest /= N;
        }
        double prod = 1.0;
        for (std::size_t t = 3; t-- > 0;)
            prod = base2.maps[digits[t]].contraction * prod;
        CHECK(p3.maps[flat].contraction == prod);
        CHECK(p3.maps[flat].contraction <= cmax * cmax * cmax * (1 + 1e-12));
    }

    // Fixed points satisfy the fixed-point equation of the composed
    // coefficients and stay inside the domain box.
    for (const IfsMap& map : p3.maps) {
        const Point3 fp = map.fixed_pt;
        CHECK(p3.metric.rho(map.coeffs.apply(fp), fp) <= 1e-9 * p3.scale);
        CHECK(fp.x >= p3.metric.x_lo - 1e-9);
        CHECK(fp.x <= p3.metric.x_hi + 1e-9);
        CHECK(fp.y >= p3.metric.y_lo - 1e-9);
        CHECK(fp.y <= p3.metric.y_hi + 1e-9);
    }
}

TEST_CASE("factor labels decompose the flat index, outermost first") {
    const IfsSystem base = build_system(testutil::load_example1());
    const ComposedSystem p1 = compose_system(base, 1);
    for (std::size_t i = 0; i < 4; ++i) {
        const auto labels = factor_labels(p1, i);
        REQUIRE(labels.size() == 1);
        CHECK(labels[0].first == base.maps[i].k);
        CHECK(labels[0].second == base.maps[i].l);
    }

    const ComposedSystem p2 = compose_system(base, 2);
    // flat 6 = 1*4 + 2: outer base map 1 = cell (1,2), inner base map 2 =
    // cell (2,1).
    const auto labels = factor_labels(p2, 6);
    REQUIRE(labels.size() == 2);
    CHECK(labels[0] == std::make_pair(std::size_t{1}, std::size_t{2}));
    CHECK(labels[1] == std::make_pair(std::size_t{2}, std::size_t{1}));
    // The composed map is indeed outer(inner(.)).
    const MapCoefficients expect =
        compose_pair(base.maps[1].coeffs, base.maps[2].coeffs);
    CHECK(p2.maps[6].coeffs.a == expect.a);
    CHECK(p2.maps[6].coeffs.beta == expect.beta);
    CHECK(p2.maps[6].k == base.maps[1].k);
    CHECK(p2.maps[6].l == base.maps[1].l);
}

TEST_CASE("the composition cap is enforced") {
    const IfsSystem base = build_system(testutil::load_example2());
    ComposeOptions opts;
    opts.cap = 10'000;
    try {
        compose_system(base, 5, opts);
        FAIL("expected SystemTooLarge");
    } catch (const SystemTooLarge& e) {
        CHECK(e.requested == 59049);
        CHECK(e.cap == 10'000);
    }
    opts.cap = 100'000;
    const ComposedSystem p5 = compose_system(base, 5, opts);
    CHECK(p5.maps.size() == 59049);

    CHECK_THROWS_AS(compose_system(base, 0), Error);
}

TEST_CASE("optional tightening never worsens a constant") {
    const IfsSystem base = build_system(testutil::load_example2());
    ComposeOptions tighten;
    tighten.tighten = true;
    const ComposedSystem plain = compose_system(base, 3);
    const ComposedSystem tight = compose_system(base, 3, tighten);
    REQUIRE(plain.maps.size() == tight.maps.size());
    for (std::size_t i = 0; i < plain.maps.size(); ++i) {
        CHECK(tight.maps[i].contraction <= plain.maps[i].contraction);
        CHECK(tight.maps[i].contraction > 0.0);
    }
}
