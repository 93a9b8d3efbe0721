#include "tricomplex/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tricomplex {

std::uint8_t gray_level(std::uint32_t escape, std::uint32_t max_iter) {
    if (escape == 0) return 0;
    if (max_iter == 0) return 255;
    const std::uint64_t clamped = std::min(escape, max_iter);
    return static_cast<std::uint8_t>((255 * clamped) / max_iter);
}

std::string ppm_bytes(const Raster2D& r) {
    const std::uint32_t w = r.window.x.cells, h = r.window.y.cells;
    std::string out = "P6\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
    out.reserve(out.size() + 3 * std::size_t{w} * h);
    for (std::uint32_t row = 0; row < h; ++row) {
        const std::uint32_t j = h - 1 - row;
        for (std::uint32_t i = 0; i < w; ++i) {
            const char g = static_cast<char>(gray_level(r.at(i, j), r.max_iter));
            out.append(3, g);
        }
    }
    return out;
}

std::string format_fixed(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", value);
    return buf;
}

std::string vox_bytes(const Raster3D& r) {
    const Window3D& w = r.window;
    std::string out = "TRIVOX1 " + std::to_string(w.x.cells) + " " + std::to_string(w.y.cells) + " " +
                      std::to_string(w.z.cells);
    for (const AxisRange* a : {&w.x, &w.y, &w.z}) out += " " + format_fixed(a->lo) + " " + format_fixed(a->hi);
    out += '\n';
    out.reserve(out.size() + r.escape.size());
    for (std::uint32_t e : r.escape) out.push_back(e == 0 ? '\x01' : '\x00');
    return out;
}

std::string octahedron_obj(const OctahedronSpec& spec) {
    const double m = spec.half_diag;
    // 1:+x 2:-x 3:+y 4:-y 5:+z 6:-z
    const double verts[6][3] = {{m, 0, 0}, {-m, 0, 0}, {0, m, 0}, {0, -m, 0}, {0, 0, m}, {0, 0, -m}};
    // counter-clockwise seen from outside
    const int faces[8][3] = {{1, 3, 5}, {3, 2, 5}, {2, 4, 5}, {4, 1, 5},
                             {3, 1, 6}, {2, 3, 6}, {4, 2, 6}, {1, 4, 6}};
    std::string out = "# octahedron |x|+|y|+|z| <= " + format_fixed(m) + "\n";
    for (const auto& v : verts) {
        out += "v " + format_fixed(v[0]) + " " + format_fixed(v[1]) + " " + format_fixed(v[2]) + "\n";
    }
    for (const auto& f : faces) {
        out += "f " + std::to_string(f[0]) + " " + std::to_string(f[1]) + " " + std::to_string(f[2]) + "\n";
    }
    return out;
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_ppm(const Raster2D& r, const std::filesystem::path& path) { write_file(path, ppm_bytes(r)); }
void write_vox(const Raster3D& r, const std::filesystem::path& path) { write_file(path, vox_bytes(r)); }
void write_octahedron_obj(const OctahedronSpec& spec, const std::filesystem::path& path) {
    write_file(path, octahedron_obj(spec));
}

VoxGrid parse_vox(std::string_view bytes) {
    const auto newline = bytes.find('\n');
    if (newline == std::string_view::npos) throw std::runtime_error("vox: missing header line");
    std::istringstream header{std::string(bytes.substr(0, newline))};
    std::string magic;
    std::uint32_t nx = 0, ny = 0, nz = 0;
    double b[6]{};
    header >> magic >> nx >> ny >> nz >> b[0] >> b[1] >> b[2] >> b[3] >> b[4] >> b[5];
    if (!header || magic != "TRIVOX1") throw std::runtime_error("vox: malformed header");
    VoxGrid grid;
    grid.window = Window3D{{b[0], b[1], nx}, {b[2], b[3], ny}, {b[4], b[5], nz}};
    const std::string_view payload = bytes.substr(newline + 1);
    if (payload.size() != grid.window.cell_count()) throw std::runtime_error("vox: payload size does not match header");
    grid.occupancy.assign(payload.begin(), payload.end());
    for (std::uint8_t v : grid.occupancy) {
        if (v > 1) throw std::runtime_error("vox: occupancy byte other than 0/1");
    }
    return grid;
}

VoxGrid read_vox(const std::filesystem::path& path) { return parse_vox(read_file(path)); }

CsvWriter::CsvWriter(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

void CsvWriter::add_row(std::vector<std::string> fields) { rows_.push_back(std::move(fields)); }

std::string CsvWriter::str() const {
    std::string out;
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            const std::string& f = row[i];
            if (f.find_first_of(",\"\n") == std::string::npos) {
                out += f;
                continue;
            }
            out += '"';
            for (char ch : f) {
                if (ch == '"') out += '"';
                out += ch;
            }
            out += '"';
        }
        out += '\n';
    }
    return out;
}

void CsvWriter::write(const std::filesystem::path& path) const { write_file(path, str()); }

}  // namespace tricomplex
