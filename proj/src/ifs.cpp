#include "octacover/ifs.hpp"

#include <algorithm>
#include <cmath>

namespace octacover {

CornerResiduals corner_residuals(const DataGrid& grid, std::size_t k,
                                 std::size_t l) {
    const std::size_t n = grid.n(), m = grid.m();
    const double g = grid.g[k - 1][l - 1];
    CornerResiduals res;
    res.p = grid.z[k][l] - g * grid.z[n][m];
    res.q = grid.z[k - 1][l] - g * grid.z[0][m];
    res.r = grid.z[k][l - 1] - g * grid.z[n][0];
    res.t = grid.z[k - 1][l - 1] - g * grid.z[0][0];
    return res;
}

MapCoefficients compute_coefficients(const DataGrid& grid, std::size_t k,
                                     std::size_t l) {
    const std::size_t n = grid.n(), m = grid.m();
    const double x0 = grid.x[0], xn = grid.x[n];
    const double y0 = grid.y[0], ym = grid.y[m];

    MapCoefficients mc;
    mc.a = (grid.x[k] - grid.x[k - 1]) / (xn - x0);
    mc.b = (grid.x[k - 1] * xn - grid.x[k] * x0) / (xn - x0);
    mc.c = (grid.y[l] - grid.y[l - 1]) / (ym - y0);
    mc.d = (grid.y[l - 1] * ym - grid.y[l] * y0) / (ym - y0);
    mc.g = grid.g[k - 1][l - 1];

    const CornerResiduals cr = corner_residuals(grid, k, l);
    const double D = (xn - x0) * (ym - y0);
    mc.alpha = (cr.p - cr.q - cr.r + cr.t) / D;
    mc.e = (y0 * (cr.q - cr.p) - ym * (cr.t - cr.r)) / D;
    mc.f = (x0 * (cr.r - cr.p) - xn * (cr.t - cr.q)) / D;
    mc.beta =
        (y0 * (x0 * cr.p - xn * cr.q) - ym * (x0 * cr.r - xn * cr.t)) / D;
    return mc;
}

ScaledTaxicabMetric compute_theta(std::span<const MapCoefficients> all_coeffs,
                                  double delta) {
    double a_max = 0.0, c_max = 0.0;
    double ex_max = 0.0;  // max |e| + delta*|alpha|
    double fy_max = 0.0;  // max |f| + delta*|alpha|
    for (const MapCoefficients& mc : all_coeffs) {
        a_max = std::max(a_max, mc.a);
        c_max = std::max(c_max, mc.c);
        const double da = delta * std::fabs(mc.alpha);
        ex_max = std::max(ex_max, std::fabs(mc.e) + da);
        fy_max = std::max(fy_max, std::fabs(mc.f) + da);
    }
    ScaledTaxicabMetric metric;
    metric.delta = delta;
    metric.theta1 = ex_max == 0.0 ? 1.0 : (1.0 - a_max) / (2.0 * ex_max);
    metric.theta2 = fy_max == 0.0 ? 1.0 : (1.0 - c_max) / (2.0 * fy_max);
    metric.theta = std::min(metric.theta1, metric.theta2);
    return metric;
}

double contraction_constant(const MapCoefficients& coeffs,
                            const ScaledTaxicabMetric& metric) {
    const double da = metric.delta * std::fabs(coeffs.alpha);
    const double cx = coeffs.a + metric.theta * (std::fabs(coeffs.e) + da);
    const double cy = coeffs.c + metric.theta * (std::fabs(coeffs.f) + da);
    const double C = std::max(std::max(cx, cy), std::fabs(coeffs.g));
    if (!(C < 1.0)) throw ContractionNotStrict(C);
    return C;
}

Point3 fixed_point(const MapCoefficients& coeffs) {
    const double gx = coeffs.b / (1.0 - coeffs.a);
    const double gy = coeffs.d / (1.0 - coeffs.c);
    const double gz = (coeffs.e * gx + coeffs.f * gy +
                       coeffs.alpha * gx * gy + coeffs.beta) /
                      (1.0 - coeffs.g);
    return {gx, gy, gz};
}

IfsSystem build_system(const DataGrid& grid) {
    validate_grid(grid);

    IfsSystem sys;
    sys.n = grid.n();
    sys.m = grid.m();
    sys.scale = grid.scale();

    std::vector<MapCoefficients> coeffs;
    coeffs.reserve(sys.n * sys.m);
    for (std::size_t k = 1; k <= sys.n; ++k)
        for (std::size_t l = 1; l <= sys.m; ++l)
            coeffs.push_back(compute_coefficients(grid, k, l));

    sys.metric = compute_theta(coeffs, grid.delta());
    sys.metric.x_lo = grid.x.front();
    sys.metric.x_hi = grid.x.back();
    sys.metric.y_lo = grid.y.front();
    sys.metric.y_hi = grid.y.back();

    sys.maps.reserve(coeffs.size());
    std::size_t i = 0;
    for (std::size_t k = 1; k <= sys.n; ++k)
        for (std::size_t l = 1; l <= sys.m; ++l, ++i) {
            IfsMap map;
            map.coeffs = coeffs[i];
            map.contraction = contraction_constant(coeffs[i], sys.metric);
            map.fixed_pt = fixed_point(coeffs[i]);
            map.k = k;
            map.l = l;
            sys.maps.push_back(map);
        }
    return sys;
}

}  // namespace octacover
