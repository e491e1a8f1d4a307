#include "octacover/grid.hpp"

#include <algorithm>
#include <cmath>

namespace octacover {

double DataGrid::z_min() const {
    double v = z.at(0).at(0);
    for (const auto& row : z)
        for (double zz : row) v = std::min(v, zz);
    return v;
}

double DataGrid::z_max() const {
    double v = z.at(0).at(0);
    for (const auto& row : z)
        for (double zz : row) v = std::max(v, zz);
    return v;
}

double DataGrid::delta() const {
    return std::max(std::max(std::fabs(x.front()), std::fabs(x.back())),
                    std::max(std::fabs(y.front()), std::fabs(y.back())));
}

double DataGrid::scale() const {
    double s = std::max(x.back() - x.front(), y.back() - y.front());
    s = std::max(s, z_max() - z_min());
    return std::max(s, delta());
}

void check_shape(const DataGrid& grid) {
    if (grid.x.size() < 2 || grid.y.size() < 2)
        throw TooFewMaps(grid.x.empty() ? 0 : grid.x.size() - 1,
                         grid.y.empty() ? 0 : grid.y.size() - 1);
    const std::size_t rows = grid.x.size(), cols = grid.y.size();
    if (grid.z.size() != rows)
        throw ParseError("z must have " + std::to_string(rows) +
                         " rows (one per x node), got " +
                         std::to_string(grid.z.size()));
    for (std::size_t k = 0; k < rows; ++k)
        if (grid.z[k].size() != cols)
            throw ParseError("z row " + std::to_string(k) + " must have " +
                             std::to_string(cols) + " values, got " +
                             std::to_string(grid.z[k].size()));
    if (grid.g.size() != rows - 1)
        throw ParseError("g must have " + std::to_string(rows - 1) +
                         " rows (one per x interval), got " +
                         std::to_string(grid.g.size()));
    for (std::size_t k = 0; k + 1 < rows; ++k)
        if (grid.g[k].size() != cols - 1)
            throw ParseError("g row " + std::to_string(k) + " must have " +
                             std::to_string(cols - 1) + " values, got " +
                             std::to_string(grid.g[k].size()));
}

namespace {

// Max deviation of the edge's nodes from the chord through its endpoints.
// coord[i] is the running axis coordinate of value[i].
double chord_deviation(const std::vector<double>& coord,
                       const std::vector<double>& value) {
    const double c0 = coord.front(), c1 = coord.back();
    const double v0 = value.front(), v1 = value.back();
    double dev = 0.0;
    for (std::size_t i = 0; i < coord.size(); ++i) {
        const double lin = v0 + (coord[i] - c0) / (c1 - c0) * (v1 - v0);
        dev = std::max(dev, std::fabs(value[i] - lin));
    }
    return dev;
}

}  // namespace

void validate_grid(const DataGrid& grid, double collinearity_tol_rel) {
    check_shape(grid);

    for (std::size_t k = 0; k + 1 < grid.x.size(); ++k)
        if (!(grid.x[k] < grid.x[k + 1])) throw NonMonotoneAxis('x', k + 1);
    for (std::size_t l = 0; l + 1 < grid.y.size(); ++l)
        if (!(grid.y[l] < grid.y[l + 1])) throw NonMonotoneAxis('y', l + 1);

    for (std::size_t k = 0; k < grid.g.size(); ++k)
        for (std::size_t l = 0; l < grid.g[k].size(); ++l)
            if (!(std::fabs(grid.g[k][l]) < 1.0))
                throw GOutOfRange(k, l, grid.g[k][l]);

    const double tol = collinearity_tol_rel * grid.scale();
    const std::size_t n = grid.n(), m = grid.m();
    std::vector<double> edge(m + 1);
    for (std::size_t l = 0; l <= m; ++l) edge[l] = grid.z[0][l];
    double dev = chord_deviation(grid.y, edge);
    if (dev > tol) throw BoundaryNotCollinear("x_lo", dev, tol);
    for (std::size_t l = 0; l <= m; ++l) edge[l] = grid.z[n][l];
    dev = chord_deviation(grid.y, edge);
    if (dev > tol) throw BoundaryNotCollinear("x_hi", dev, tol);

    edge.assign(n + 1, 0.0);
    for (std::size_t k = 0; k <= n; ++k) edge[k] = grid.z[k][0];
    dev = chord_deviation(grid.x, edge);
    if (dev > tol) throw BoundaryNotCollinear("y_lo", dev, tol);
    for (std::size_t k = 0; k <= n; ++k) edge[k] = grid.z[k][m];
    dev = chord_deviation(grid.x, edge);
    if (dev > tol) throw BoundaryNotCollinear("y_hi", dev, tol);
}

}  // namespace octacover
