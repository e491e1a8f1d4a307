#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "octacover/grid.hpp"

using namespace octacover;
using testutil::TestRng;

namespace {

DataGrid small_grid() {
    DataGrid g;
    g.x = {0, 1, 2};
    g.y = {0, 1};
    g.z = {{0, 1}, {1, 2}, {2, 3}};
    g.g = {{0.5}, {0.5}};
    return g;
}

// Independent collinearity oracle: the triangle area test. Nodes
// (c_i, v_i) are collinear iff every cross product with the endpoints
// vanishes.
bool edge_collinear(const std::vector<double>& c, const std::vector<double>& v,
                    double tol) {
    const double dc = c.back() - c.front(), dv = v.back() - v.front();
    for (std::size_t i = 1; i + 1 < c.size(); ++i) {
        const double cross =
            (c[i] - c.front()) * dv - dc * (v[i] - v.front());
        if (std::fabs(cross) > tol * std::fabs(dc)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("bundled fixtures parse and validate") {
    const DataGrid ex1 = testutil::load_example1();
    CHECK(ex1.n() == 2);
    CHECK(ex1.m() == 2);
    CHECK(ex1.delta() == 200.0);
    CHECK(ex1.scale() == 200.0);
    CHECK(ex1.z_min() == -30.0);
    CHECK(ex1.z_max() == 20.0);

    const DataGrid ex2 = testutil::load_example2();
    CHECK(ex2.n() == 3);
    CHECK(ex2.m() == 3);
    CHECK(ex2.delta() == 300.0);
    CHECK(ex2.scale() == 300.0);
    CHECK_NOTHROW(validate_grid(ex1));
    CHECK_NOTHROW(validate_grid(ex2));
}

TEST_CASE("shape mismatches are parse errors") {
    DataGrid g = small_grid();
    g.z.pop_back();
    CHECK_THROWS_AS(check_shape(g), ParseError);

    g = small_grid();
    g.z[1].push_back(9.0);
    CHECK_THROWS_AS(check_shape(g), ParseError);

    g = small_grid();
    g.g.push_back({0.5});
    CHECK_THROWS_AS(check_shape(g), ParseError);

    g = small_grid();
    g.g[0].clear();
    CHECK_THROWS_AS(check_shape(g), ParseError);
}

TEST_CASE("single-interval axes are required") {
    DataGrid g;
    g.x = {0.0};
    g.y = {0, 1};
    g.z = {{0, 0}};
    g.g = {};
    CHECK_THROWS_AS(check_shape(g), TooFewMaps);
    try {
        check_shape(g);
    } catch (const TooFewMaps& e) {
        CHECK(e.n == 0);
        CHECK(e.m == 1);
    }
}

TEST_CASE("non-monotone axes are rejected with axis and index") {
    DataGrid g = small_grid();
    g.x = {0, 2, 2};
    try {
        validate_grid(g);
        FAIL("expected NonMonotoneAxis");
    } catch (const NonMonotoneAxis& e) {
        CHECK(e.axis == 'x');
        CHECK(e.index == 2);
    }

    g = small_grid();
    g.y = {1, 0};
    try {
        validate_grid(g);
        FAIL("expected NonMonotoneAxis");
    } catch (const NonMonotoneAxis& e) {
        CHECK(e.axis == 'y');
        CHECK(e.index == 1);
    }
}

TEST_CASE("vertical scalings must have magnitude below one") {
    DataGrid g = small_grid();
    g.g[1][0] = 1.0;
    try {
        validate_grid(g);
        FAIL("expected GOutOfRange");
    } catch (const GOutOfRange& e) {
        CHECK(e.k == 1);
        CHECK(e.l == 0);
        CHECK(e.value == 1.0);
    }
    g.g[1][0] = -1.25;
    CHECK_THROWS_AS(validate_grid(g), GOutOfRange);
    g.g[1][0] = 0.999;
    CHECK_NOTHROW(validate_grid(g));
}

TEST_CASE("perturbed boundary nodes fail collinearity with edge identified") {
    DataGrid g = testutil::load_example1();
    g.z[0][1] += 1.0;  // x_lo edge interior node off the chord by 1
    try {
        validate_grid(g);
        FAIL("expected BoundaryNotCollinear");
    } catch (const BoundaryNotCollinear& e) {
        CHECK(e.edge == "x_lo");
        CHECK(e.deviation == doctest::Approx(1.0));
        CHECK(e.tolerance < 1e-6);
    }

    g = testutil::load_example1();
    g.z[1][2] -= 0.5;  // y_hi edge
    try {
        validate_grid(g);
        FAIL("expected BoundaryNotCollinear");
    } catch (const BoundaryNotCollinear& e) {
        CHECK(e.edge == "y_hi");
        CHECK(e.deviation == doctest::Approx(0.5));
    }
}

TEST_CASE("validation agrees with the cross-product collinearity oracle") {
    TestRng rng(20240901);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng.below(3), m = 2 + rng.below(3);
        DataGrid g;
        g.x.resize(n + 1);
        g.y.resize(m + 1);
        double acc = rng.uniform(-50, 50);
        for (auto& v : g.x) {
            v = acc;
            acc += rng.uniform(1, 40);
        }
        acc = rng.uniform(-50, 50);
        for (auto& v : g.y) {
            v = acc;
            acc += rng.uniform(1, 40);
        }
        // Random corner values; boundary edges linear between them by
        // construction, interior free.
        const double z00 = rng.uniform(-20, 20), z0m = rng.uniform(-20, 20);
        const double zn0 = rng.uniform(-20, 20), znm = rng.uniform(-20, 20);
        auto edge_mix = [](double a, double b, double t) {
            return a + (b - a) * t;
        };
        g.z.assign(n + 1, std::vector<double>(m + 1));
        for (std::size_t k = 0; k <= n; ++k)
            for (std::size_t l = 0; l <= m; ++l) {
                const double tx =
                    (g.x[k] - g.x[0]) / (g.x[n] - g.x[0]);
                const double ty =
                    (g.y[l] - g.y[0]) / (g.y[m] - g.y[0]);
                if (k == 0)
                    g.z[k][l] = edge_mix(z00, z0m, ty);
                else if (k == n)
                    g.z[k][l] = edge_mix(zn0, znm, ty);
                else if (l == 0)
                    g.z[k][l] = edge_mix(z00, zn0, tx);
                else if (l == m)
                    g.z[k][l] = edge_mix(z0m, znm, tx);
                else
                    g.z[k][l] = rng.uniform(-40, 40);
            }
        g.g.assign(n, std::vector<double>(m));
        for (auto& row : g.g)
            for (auto& v : row) v = rng.uniform(-0.9, 0.9);

        CHECK_NOTHROW(validate_grid(g));

        // The oracle agrees the edges are collinear.
        std::vector<double> edge(m + 1);
        for (std::size_t l = 0; l <= m; ++l) edge[l] = g.z[0][l];
        CHECK(edge_collinear(g.y, edge, 1e-9 * g.scale()));

        // A perturbation well above tolerance must be rejected whenever the
        // oracle rejects it.
        DataGrid bad = g;
        const std::size_t which = rng.below(4);
        const double bump = (1e-3 + rng.uniform01()) * g.scale();
        if (which == 0 && m >= 2)
            bad.z[0][1] += bump;
        else if (which == 1 && m >= 2)
            bad.z[n][1] += bump;
        else if (which == 2 && n >= 2)
            bad.z[1][0] += bump;
        else if (n >= 2)
            bad.z[1][m] += bump;
        else
            bad.z[0][1] += bump;
        CHECK_THROWS_AS(validate_grid(bad), BoundaryNotCollinear);
    }
}
