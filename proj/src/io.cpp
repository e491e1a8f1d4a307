#include "octacover/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "octacover/errors.hpp"

namespace octacover {
namespace {

using nlohmann::json;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> read_vector(const json& j, const char* key,
                                std::string_view origin) {
    const auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string(origin) + ": missing key '" + key + "'");
    if (!it->is_array())
        throw ParseError(std::string(origin) + ": '" + key +
                         "' must be an array of numbers");
    std::vector<double> out;
    out.reserve(it->size());
    for (const auto& v : *it) {
        if (!v.is_number())
            throw ParseError(std::string(origin) + ": '" + key +
                             "' must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

std::vector<std::vector<double>> read_matrix(const json& j, const char* key,
                                             std::string_view origin) {
    const auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string(origin) + ": missing key '" + key + "'");
    if (!it->is_array())
        throw ParseError(std::string(origin) + ": '" + key +
                         "' must be an array of rows");
    std::vector<std::vector<double>> out;
    out.reserve(it->size());
    std::size_t row = 0;
    for (const auto& r : *it) {
        if (!r.is_array())
            throw ParseError(std::string(origin) + ": '" + key + "' row " +
                             std::to_string(row) + " must be an array");
        std::vector<double> vals;
        vals.reserve(r.size());
        for (const auto& v : r) {
            if (!v.is_number())
                throw ParseError(std::string(origin) + ": '" + key + "' row " +
                                 std::to_string(row) +
                                 " must contain only numbers");
            vals.push_back(v.get<double>());
        }
        out.push_back(std::move(vals));
        ++row;
    }
    return out;
}

void emit_vector(std::string& out, const std::vector<double>& v) {
    out += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += num(v[i]);
    }
    out += ']';
}

void emit_matrix(std::string& out,
                 const std::vector<std::vector<double>>& mat) {
    out += '[';
    for (std::size_t r = 0; r < mat.size(); ++r) {
        if (r) out += ',';
        out += "\n    ";
        emit_vector(out, mat[r]);
    }
    out += "\n  ]";
}

void emit_point(std::string& out, const Point3& p) {
    out += '[';
    out += num(p.x);
    out += ", ";
    out += num(p.y);
    out += ", ";
    out += num(p.z);
    out += ']';
}

}  // namespace

DataGrid parse_grid_text(std::string_view text, std::string_view origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(origin) + ": " + e.what());
    }
    if (!j.is_object())
        throw ParseError(std::string(origin) +
                         ": top level must be an object with keys x, y, z, g");
    DataGrid grid;
    grid.x = read_vector(j, "x", origin);
    grid.y = read_vector(j, "y", origin);
    grid.z = read_matrix(j, "z", origin);
    grid.g = read_matrix(j, "g", origin);
    validate_grid(grid);
    return grid;
}

DataGrid parse_grid(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open grid file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_grid_text(buf.str(), path.string());
}

std::string serialize_grid(const DataGrid& grid) {
    std::string out = "{\n  \"x\": ";
    emit_vector(out, grid.x);
    out += ",\n  \"y\": ";
    emit_vector(out, grid.y);
    out += ",\n  \"z\": ";
    emit_matrix(out, grid.z);
    out += ",\n  \"g\": ";
    emit_matrix(out, grid.g);
    out += "\n}\n";
    return out;
}

void atomic_write(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error("cannot write file: " + tmp.string());
        out.write(content.data(), std::streamsize(content.size()));
        if (!out)
            throw Error("short write: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw Error("cannot move " + tmp.string() + " into place: " +
                    ec.message());
    }
}

CoverReport make_cover_report(const ComposedSystem& system,
                              const RadiusSolution& solution,
                              const OctahedronCover& cover,
                              const ContainmentSummary& containment) {
    CoverReport report;
    report.order = system.order;
    report.metric = system.metric;
    report.scale = system.scale;
    report.diameter = solution.diameter;
    report.primary_index = solution.primary_index;
    report.secondary_index = solution.secondary_index;
    report.containment = containment;
    report.maps.resize(system.maps.size());
    for (std::size_t i = 0; i < system.maps.size(); ++i) {
        CoverReport::MapRecord& rec = report.maps[i];
        rec.labels = factor_labels(system, i);
        rec.coeffs = system.maps[i].coeffs;
        rec.contraction = system.maps[i].contraction;
        rec.fixed_pt = system.maps[i].fixed_pt;
        rec.radius = solution.radii[i];
        rec.vertices = cover.octahedra[i].vertices(system.metric);
    }
    return report;
}

std::string render_report(const CoverReport& report) {
    std::string out = "{\n";
    out += "  \"order\": " + std::to_string(report.order) + ",\n";
    out += "  \"theta\": " + num(report.metric.theta) + ",\n";
    out += "  \"theta1\": " + num(report.metric.theta1) + ",\n";
    out += "  \"theta2\": " + num(report.metric.theta2) + ",\n";
    out += "  \"delta\": " + num(report.metric.delta) + ",\n";
    out += "  \"domain\": {\"x_lo\": " + num(report.metric.x_lo) +
           ", \"x_hi\": " + num(report.metric.x_hi) +
           ", \"y_lo\": " + num(report.metric.y_lo) +
           ", \"y_hi\": " + num(report.metric.y_hi) + "},\n";
    out += "  \"scale\": " + num(report.scale) + ",\n";
    out += "  \"diameter\": " + num(report.diameter) + ",\n";
    out += "  \"primary_index\": " + std::to_string(report.primary_index) +
           ",\n";
    out += "  \"secondary_index\": " + std::to_string(report.secondary_index) +
           ",\n";
    out += "  \"map_count\": " + std::to_string(report.maps.size()) + ",\n";
    out += "  \"maps\": [";
    for (std::size_t i = 0; i < report.maps.size(); ++i) {
        const auto& rec = report.maps[i];
        out += i ? ",\n    {" : "\n    {";
        out += "\"labels\": [";
        for (std::size_t t = 0; t < rec.labels.size(); ++t) {
            if (t) out += ", ";
            out += '[' + std::to_string(rec.labels[t].first) + ", " +
                   std::to_string(rec.labels[t].second) + ']';
        }
        out += "],\n     \"coefficients\": {";
        out += "\"a\": " + num(rec.coeffs.a) + ", \"b\": " + num(rec.coeffs.b);
        out += ", \"c\": " + num(rec.coeffs.c) + ", \"d\": " + num(rec.coeffs.d);
        out += ", \"e\": " + num(rec.coeffs.e) + ", \"f\": " + num(rec.coeffs.f);
        out += ", \"g\": " + num(rec.coeffs.g);
        out += ", \"alpha\": " + num(rec.coeffs.alpha);
        out += ", \"beta\": " + num(rec.coeffs.beta) + "},\n";
        out += "     \"contraction\": " + num(rec.contraction) + ",\n";
        out += "     \"fixed_point\": ";
        emit_point(out, rec.fixed_pt);
        out += ",\n     \"radius\": " + num(rec.radius) + ",\n";
        out += "     \"vertices\": [";
        for (std::size_t v = 0; v < rec.vertices.size(); ++v) {
            if (v) out += ", ";
            emit_point(out, rec.vertices[v]);
        }
        out += "]}";
    }
    out += "\n  ],\n";
    out += "  \"containment\": {\"points_tested\": " +
           std::to_string(report.containment.points_tested) +
           ", \"failures\": " + std::to_string(report.containment.failures) +
           ", \"slack\": " + num(report.containment.slack) +
           ", \"max_excess\": " + num(report.containment.max_excess) + "}\n";
    out += "}\n";
    return out;
}

std::string render_cover_obj(const OctahedronCover& cover) {
    std::string out;
    out += "# octahedron cover, order " + std::to_string(cover.order) + ", " +
           std::to_string(cover.octahedra.size()) + " octahedra\n";
    // Faces of the rho-ball: one triangle per sign octant.
    static const int faces[8][3] = {{1, 3, 5}, {3, 2, 5}, {2, 4, 5}, {4, 1, 5},
                                    {3, 1, 6}, {2, 3, 6}, {4, 2, 6}, {1, 4, 6}};
    for (std::size_t i = 0; i < cover.octahedra.size(); ++i) {
        out += "o oct_" + std::to_string(i) + "\n";
        const auto verts = cover.octahedra[i].vertices(cover.metric);
        for (const Point3& v : verts) {
            out += "v " + num(v.x) + ' ' + num(v.y) + ' ' + num(v.z) + '\n';
        }
        const std::size_t base = 6 * i;
        for (const auto& f : faces) {
            out += "f " + std::to_string(base + f[0]) + ' ' +
                   std::to_string(base + f[1]) + ' ' +
                   std::to_string(base + f[2]) + '\n';
        }
    }
    return out;
}

void write_cover_obj(const std::filesystem::path& path,
                     const OctahedronCover& cover) {
    atomic_write(path, render_cover_obj(cover));
}

std::string render_cloud_xyz(const PointCloud& cloud) {
    std::string out;
    out.reserve(cloud.points.size() * 24);
    for (const Point3& p : cloud.points) {
        out += num(p.x);
        out += ' ';
        out += num(p.y);
        out += ' ';
        out += num(p.z);
        out += '\n';
    }
    return out;
}

void write_cloud_xyz(const std::filesystem::path& path,
                     const PointCloud& cloud) {
    atomic_write(path, render_cloud_xyz(cloud));
}

}  // namespace octacover
