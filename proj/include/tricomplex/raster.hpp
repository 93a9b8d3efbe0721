#pragma once

// Escape-time grids over axis-aligned windows, scanned in parallel tiles,
// and the discrete Hausdorff distance between their inside-cell sets.
//
// Cells are sampled at their centres. Cell (i, j[, k]) covers
// [lo + i*h, lo + (i+1)*h) on each axis, with index 0 at the low end.
// Storage is x fastest, then y, then z.

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "tricomplex/algebra.hpp"

namespace tricomplex {

struct AxisRange {
    double lo = 0.0;
    double hi = 0.0;
    std::uint32_t cells = 0;

    double step() const { return (hi - lo) / cells; }
    double center(std::uint32_t i) const { return lo + (i + 0.5) * step(); }
    friend bool operator==(const AxisRange&, const AxisRange&) = default;
};

/// Throws std::invalid_argument unless lo < hi and cells >= 2 on every axis.
struct Window2D {
    AxisRange x, y;

    static Window2D make(double x_lo, double x_hi, double y_lo, double y_hi, std::uint32_t nx, std::uint32_t ny);
    static Window2D square(double lo, double hi, std::uint32_t n) { return make(lo, hi, lo, hi, n, n); }
    std::size_t cell_count() const { return std::size_t{x.cells} * y.cells; }
    double cell_diagonal() const;
    friend bool operator==(const Window2D&, const Window2D&) = default;
};

struct Window3D {
    AxisRange x, y, z;

    static Window3D make(double x_lo, double x_hi, double y_lo, double y_hi, double z_lo, double z_hi,
                         std::uint32_t nx, std::uint32_t ny, std::uint32_t nz);
    static Window3D cube(double lo, double hi, std::uint32_t n) { return make(lo, hi, lo, hi, lo, hi, n, n, n); }
    std::size_t cell_count() const { return std::size_t{x.cells} * y.cells * z.cells; }
    double cell_diagonal() const;
    friend bool operator==(const Window3D&, const Window3D&) = default;
};

enum class PlaneKind { MultibrotComplex, Hyperbrot };

std::string_view plane_kind_name(PlaneKind k);
/// Parameter embedded for a 2D cell centre: x + y i1 or x + y j1.
Tricomplex embed_plane(PlaneKind kind, double x, double y);

/// Escape index per cell, 0 = bounded (inside). Analytic rasters built by
/// rasterize() use 1 for outside and power = max_iter = 0.
struct Raster2D {
    Window2D window;
    std::vector<std::uint32_t> escape;
    int power = 0;
    std::uint32_t max_iter = 0;
    std::optional<PlaneKind> kind;

    std::uint32_t at(std::uint32_t i, std::uint32_t j) const { return escape[std::size_t{j} * window.x.cells + i]; }
    bool inside(std::uint32_t i, std::uint32_t j) const { return at(i, j) == 0; }
    std::size_t inside_count() const;
};

struct Raster3D {
    Window3D window;
    std::vector<std::uint32_t> escape;
    int power = 0;
    std::uint32_t max_iter = 0;
    std::optional<SliceSpec> slice;

    std::size_t index(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
        return (std::size_t{k} * window.y.cells + j) * window.x.cells + i;
    }
    std::uint32_t at(std::uint32_t i, std::uint32_t j, std::uint32_t k) const { return escape[index(i, j, k)]; }
    bool inside(std::uint32_t i, std::uint32_t j, std::uint32_t k) const { return at(i, j, k) == 0; }
    std::size_t inside_count() const;
};

/// Worker count for the scans; 0 means std::thread::hardware_concurrency().
struct ScanOptions {
    unsigned threads = 0;
};

/// One row per tile.
Raster2D scan2d(PlaneKind kind, int p, const Window2D& w, std::uint32_t max_iter, ScanOptions opts = {});
/// One z-slab per tile.
Raster3D scan3d(const SliceSpec& s, int p, const Window3D& w, std::uint32_t max_iter, ScanOptions opts = {});

/// Rasters of an analytic set: cell inside iff member(centre).
Raster2D rasterize(const Window2D& w, const std::function<bool(double, double)>& member);
Raster3D rasterize(const Window3D& w, const std::function<bool(double, double, double)>& member);

/// max over inside cells of `from` of the distance from its centre to the
/// nearest inside cell centre of `to`. Uses an exact Euclidean distance
/// transform. Throws std::invalid_argument on mismatched windows and
/// std::domain_error when either raster has no inside cell.
double directed_distance(const Raster2D& from, const Raster2D& to);
double directed_distance(const Raster3D& from, const Raster3D& to);
double hausdorff_discrete(const Raster2D& a, const Raster2D& b);
double hausdorff_discrete(const Raster3D& a, const Raster3D& b);

/// Quadratic-time reference for the directed distance.
double directed_distance_naive(const Raster2D& from, const Raster2D& to);
double directed_distance_naive(const Raster3D& from, const Raster3D& to);

/// Squared Euclidean distance from every cell centre to the nearest
/// feature cell centre (+inf when there is none). Separable lower-envelope
/// transform along each axis; `spacing` is the centre-to-centre distance.
std::vector<double> distance_transform_sq(const std::vector<std::uint8_t>& feature,
                                          const std::vector<std::size_t>& shape,
                                          const std::vector<double>& spacing);

}  // namespace tricomplex
