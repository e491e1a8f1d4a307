#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "octacover/attractor.hpp"
#include "octacover/compose.hpp"
#include "octacover/cover.hpp"
#include "octacover/grid.hpp"

namespace octacover {

// Grid file: JSON object with keys x (array, n+1), y (array, m+1),
// z ((n+1) rows of (m+1) values, row index k), g (n rows of m values).
DataGrid parse_grid(const std::filesystem::path& path);
DataGrid parse_grid_text(std::string_view text,
                         std::string_view origin = "<memory>");

// Doubles printed with 17 significant digits; parse(serialize(g)) == g
// bit-exactly.
std::string serialize_grid(const DataGrid& grid);

// Write via temp file + rename in the destination directory.
void atomic_write(const std::filesystem::path& path, std::string_view content);

struct ContainmentSummary {
  std::size_t points_tested = 0;
  std::size_t failures = 0;
  double slack = 0.0;       // slack the test ran with
  // Worst shortfall among failing points: max over them of
  // min over balls of (rho - radius); 0 when every point is inside.
  double max_excess = 0.0;
};

struct CoverReport {
  std::size_t order = 1;
  ScaledTaxicabMetric metric;
  double scale = 0.0;
  double diameter = 0.0;  // M
  std::size_t primary_index = 0;
  std::size_t secondary_index = 0;

  struct MapRecord {
    std::vector<std::pair<std::size_t, std::size_t>> labels;  // factor cells
    MapCoefficients coeffs;
    double contraction = 0.0;
    Point3 fixed_pt;
    double radius = 0.0;
    std::array<Point3, 6> vertices;
  };
  std::vector<MapRecord> maps;
  ContainmentSummary containment;
};

CoverReport make_cover_report(const ComposedSystem& system,
                              const RadiusSolution& solution,
                              const OctahedronCover& cover,
                              const ContainmentSummary& containment);

// Structured text, stable key names, doubles with 17 significant digits.
std::string render_report(const CoverReport& report);

// Triangle mesh, one object per octahedron: 6 vertices (V1..V6), 8
// triangular faces, 1-based shared-nothing vertex indices.
std::string render_cover_obj(const OctahedronCover& cover);
void write_cover_obj(const std::filesystem::path& path,
                     const OctahedronCover& cover);

// Whitespace-separated "x y z" lines.
std::string render_cloud_xyz(const PointCloud& cloud);
void write_cloud_xyz(const std::filesystem::path& path,
                     const PointCloud& cloud);

}  // namespace octacover
