#pragma once

#include <cstddef>
#include <vector>

#include "octacover/errors.hpp"

namespace octacover {

// Interpolation data on a rectangular mesh: nodes (x_k, y_l, z[k][l]) for
// k = 0..n, l = 0..m, and one vertical scaling factor g[k-1][l-1] of
// magnitude below 1 per subrectangle [x_{k-1},x_k] x [y_{l-1},y_l].
struct DataGrid {
    std::vector<double> x;               // n+1, strictly increasing
    std::vector<double> y;               // m+1, strictly increasing
    std::vector<std::vector<double>> z;  // (n+1) rows of m+1: z[k][l]
    std::vector<std::vector<double>> g;  // n rows of m

    std::size_t n() const { return x.empty() ? 0 : x.size() - 1; }
    std::size_t m() const { return y.empty() ? 0 : y.size() - 1; }

    double z_min() const;
    double z_max() const;
    // Largest absolute corner coordinate of the domain rectangle.
    double delta() const;
    // Reference magnitude for relative tolerances.
    double scale() const;
};

// Shape consistency; throws ParseError on mismatch. Called by parse_grid and
// by validate_grid, available separately for programmatic construction.
void check_shape(const DataGrid& grid);

// Full validation: shape, axis monotonicity, g range, and collinearity of the
// four boundary edges (each edge's (axis coordinate, z) pairs must lie on a
// line within collinearity_tol_rel * scale).
void validate_grid(const DataGrid& grid, double collinearity_tol_rel = 1e-9);

}  // namespace octacover
