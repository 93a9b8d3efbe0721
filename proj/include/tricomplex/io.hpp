#pragma once

// File formats.
//
// PPM (binary P6): "P6\n<w> <h>\n255\n" then RGB bytes, top row (highest y)
// first. Inside cells are black; escaped cells are grey
// g = floor(255 * min(escape, max_iter) / max_iter). Rasters with
// max_iter = 0 (analytic rasters) draw every escaped cell white.
//
// VOX: ASCII header "TRIVOX1 nx ny nz xlo xhi ylo yhi zlo zhi\n" with
// bounds printed as %.9f, then nx*ny*nz bytes, 1 = inside, 0 = escaped,
// x fastest, then y, then z.
//
// OBJ: the analytic octahedron, 6 vertices and 8 triangles, %.9f.
//
// Fixed-point output uses printf "%.9f", which rounds the exact binary
// value half-to-even.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tricomplex/raster.hpp"
#include "tricomplex/sets.hpp"

namespace tricomplex {

std::uint8_t gray_level(std::uint32_t escape, std::uint32_t max_iter);

std::string ppm_bytes(const Raster2D& r);
std::string vox_bytes(const Raster3D& r);
std::string octahedron_obj(const OctahedronSpec& spec);

/// Writers throw std::runtime_error naming the path on I/O failure.
void write_ppm(const Raster2D& r, const std::filesystem::path& path);
void write_vox(const Raster3D& r, const std::filesystem::path& path);
void write_octahedron_obj(const OctahedronSpec& spec, const std::filesystem::path& path);

struct VoxGrid {
    Window3D window;
    std::vector<std::uint8_t> occupancy;  // 1 = inside
};

/// Throws std::runtime_error on malformed input.
VoxGrid parse_vox(std::string_view bytes);
VoxGrid read_vox(const std::filesystem::path& path);

std::string format_fixed(double value);

/// Minimal CSV writer; fields containing ',', '"' or newlines are quoted.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);
    void add_row(std::vector<std::string> fields);
    std::string str() const;
    void write(const std::filesystem::path& path) const;

private:
    std::vector<std::vector<std::string>> rows_;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace tricomplex
