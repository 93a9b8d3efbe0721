#include "tricomplex/raster.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "tricomplex/dynamics.hpp"
#include "tricomplex/realroots.hpp"

namespace tricomplex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

AxisRange make_axis(double lo, double hi, std::uint32_t cells, char name) {
    if (!(lo < hi)) throw std::invalid_argument(std::string("window axis ") + name + " needs lo < hi");
    if (cells < 2) throw std::invalid_argument(std::string("window axis ") + name + " needs at least 2 cells");
    return {lo, hi, cells};
}

unsigned worker_count(ScanOptions opts, std::size_t tiles) {
    unsigned n = opts.threads != 0 ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(n, tiles));
}

// Runs work(tile) for every tile exactly once. Tiles write disjoint cells,
// so the result does not depend on the worker count or scheduling.
template <class Work>
void for_each_tile(std::size_t tiles, ScanOptions opts, Work&& work) {
    const unsigned workers = worker_count(opts, tiles);
    if (workers <= 1) {
        for (std::size_t t = 0; t < tiles; ++t) work(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t t = next++; t < tiles; t = next++) work(t);
        });
    }
}

// 1D lower envelope of parabolas (spacing-scaled), in place over a strided line.
void transform_line(double* data, std::size_t n, std::size_t stride, double h, std::vector<double>& f,
                    std::vector<std::size_t>& v, std::vector<double>& z) {
    f.resize(n);
    for (std::size_t q = 0; q < n; ++q) f[q] = data[q * stride];
    v.resize(n);
    z.resize(n + 1);
    const double h2 = h * h;
    std::size_t k = 0;
    bool any = false;
    for (std::size_t q = 0; q < n; ++q) {
        if (f[q] == kInf) continue;
        if (!any) {
            v[0] = q;
            z[0] = -kInf;
            z[1] = kInf;
            any = true;
            continue;
        }
        const auto dq = static_cast<double>(q);
        const auto intersect = [&](std::size_t r) {
            const auto dr = static_cast<double>(r);
            return ((f[q] + h2 * dq * dq) - (f[r] + h2 * dr * dr)) / (2.0 * h2 * (dq - dr));
        };
        // z[0] = -inf stops the pop loop at k = 0
        double s = intersect(v[k]);
        while (s <= z[k]) s = intersect(v[--k]);
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = kInf;
    }
    if (!any) return;
    k = 0;
    for (std::size_t q = 0; q < n; ++q) {
        const auto dq = static_cast<double>(q);
        while (z[k + 1] < dq) ++k;
        const double d = h * (dq - static_cast<double>(v[k]));
        data[q * stride] = d * d + f[v[k]];
    }
}

std::vector<std::uint8_t> inside_mask(const std::vector<std::uint32_t>& escape) {
    std::vector<std::uint8_t> mask(escape.size());
    std::transform(escape.begin(), escape.end(), mask.begin(), [](std::uint32_t e) { return e == 0 ? 1 : 0; });
    return mask;
}

template <class R>
void check_pair(const R& from, const R& to) {
    if (!(from.window == to.window)) throw std::invalid_argument("Hausdorff distance needs identical windows");
    if (from.inside_count() == 0 || to.inside_count() == 0) {
        throw std::domain_error("degenerate raster: no inside cells");
    }
}

double max_over_inside(const std::vector<std::uint32_t>& from, const std::vector<double>& dist_sq) {
    double best = 0.0;
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (from[i] == 0) best = std::max(best, dist_sq[i]);
    }
    return std::sqrt(best);
}

}  // namespace

Window2D Window2D::make(double x_lo, double x_hi, double y_lo, double y_hi, std::uint32_t nx, std::uint32_t ny) {
    return {make_axis(x_lo, x_hi, nx, 'x'), make_axis(y_lo, y_hi, ny, 'y')};
}

double Window2D::cell_diagonal() const { return std::hypot(x.step(), y.step()); }

Window3D Window3D::make(double x_lo, double x_hi, double y_lo, double y_hi, double z_lo, double z_hi,
                        std::uint32_t nx, std::uint32_t ny, std::uint32_t nz) {
    return {make_axis(x_lo, x_hi, nx, 'x'), make_axis(y_lo, y_hi, ny, 'y'), make_axis(z_lo, z_hi, nz, 'z')};
}

double Window3D::cell_diagonal() const {
    return std::sqrt(x.step() * x.step() + y.step() * y.step() + z.step() * z.step());
}

std::string_view plane_kind_name(PlaneKind k) {
    return k == PlaneKind::MultibrotComplex ? "multibrot-complex" : "hyperbrot";
}

Tricomplex embed_plane(PlaneKind kind, double x, double y) {
    return kind == PlaneKind::MultibrotComplex ? Tricomplex::from_complex({x, y})
                                               : Tricomplex::from_hyperbolic({x, y});
}

std::size_t Raster2D::inside_count() const { return static_cast<std::size_t>(std::count(escape.begin(), escape.end(), 0U)); }
std::size_t Raster3D::inside_count() const { return static_cast<std::size_t>(std::count(escape.begin(), escape.end(), 0U)); }

Raster2D scan2d(PlaneKind kind, int p, const Window2D& w, std::uint32_t max_iter, ScanOptions opts) {
    const PolyParams params = PolyParams::make(p);
    Raster2D r{w, std::vector<std::uint32_t>(w.cell_count()), p, max_iter, kind};
    for_each_tile(w.y.cells, opts, [&](std::size_t row) {
        const auto j = static_cast<std::uint32_t>(row);
        const double y = w.y.center(j);
        std::uint32_t* out = r.escape.data() + row * w.x.cells;
        for (std::uint32_t i = 0; i < w.x.cells; ++i) {
            out[i] = orbit(embed_plane(kind, w.x.center(i), y), params, max_iter).escape_index.value_or(0);
        }
    });
    return r;
}

Raster3D scan3d(const SliceSpec& s, int p, const Window3D& w, std::uint32_t max_iter, ScanOptions opts) {
    const PolyParams params = PolyParams::make(p);
    Raster3D r{w, std::vector<std::uint32_t>(w.cell_count()), p, max_iter, s};
    const std::size_t slab = std::size_t{w.x.cells} * w.y.cells;
    for_each_tile(w.z.cells, opts, [&](std::size_t k) {
        const double z = w.z.center(static_cast<std::uint32_t>(k));
        std::uint32_t* out = r.escape.data() + k * slab;
        for (std::uint32_t j = 0; j < w.y.cells; ++j) {
            const double y = w.y.center(j);
            for (std::uint32_t i = 0; i < w.x.cells; ++i) {
                *out++ = orbit(embed_slice(s, w.x.center(i), y, z), params, max_iter).escape_index.value_or(0);
            }
        }
    });
    return r;
}

Raster2D rasterize(const Window2D& w, const std::function<bool(double, double)>& member) {
    Raster2D r{w, std::vector<std::uint32_t>(w.cell_count()), 0, 0, std::nullopt};
    std::size_t idx = 0;
    for (std::uint32_t j = 0; j < w.y.cells; ++j) {
        for (std::uint32_t i = 0; i < w.x.cells; ++i) r.escape[idx++] = member(w.x.center(i), w.y.center(j)) ? 0 : 1;
    }
    return r;
}

Raster3D rasterize(const Window3D& w, const std::function<bool(double, double, double)>& member) {
    Raster3D r{w, std::vector<std::uint32_t>(w.cell_count()), 0, 0, std::nullopt};
    std::size_t idx = 0;
    for (std::uint32_t k = 0; k < w.z.cells; ++k) {
        for (std::uint32_t j = 0; j < w.y.cells; ++j) {
            for (std::uint32_t i = 0; i < w.x.cells; ++i) {
                r.escape[idx++] = member(w.x.center(i), w.y.center(j), w.z.center(k)) ? 0 : 1;
            }
        }
    }
    return r;
}

std::vector<double> distance_transform_sq(const std::vector<std::uint8_t>& feature,
                                          const std::vector<std::size_t>& shape,
                                          const std::vector<double>& spacing) {
    if (shape.size() != spacing.size() || shape.empty()) throw std::invalid_argument("shape/spacing mismatch");
    std::size_t total = 1;
    for (std::size_t n : shape) total *= n;
    if (feature.size() != total) throw std::invalid_argument("feature size does not match shape");

    std::vector<double> dist(total);
    std::transform(feature.begin(), feature.end(), dist.begin(), [](std::uint8_t f) { return f ? 0.0 : kInf; });

    std::vector<double> f;
    std::vector<std::size_t> v;
    std::vector<double> z;
    std::size_t stride = 1;
    for (std::size_t axis = 0; axis < shape.size(); ++axis) {
        const std::size_t n = shape[axis];
        const std::size_t block = stride * n;
        for (std::size_t outer = 0; outer < total; outer += block) {
            for (std::size_t inner = 0; inner < stride; ++inner) {
                transform_line(dist.data() + outer + inner, n, stride, spacing[axis], f, v, z);
            }
        }
        stride = block;
    }
    return dist;
}

double directed_distance(const Raster2D& from, const Raster2D& to) {
    check_pair(from, to);
    const auto& w = to.window;
    const auto dt = distance_transform_sq(inside_mask(to.escape), {w.x.cells, w.y.cells}, {w.x.step(), w.y.step()});
    return max_over_inside(from.escape, dt);
}

double directed_distance(const Raster3D& from, const Raster3D& to) {
    check_pair(from, to);
    const auto& w = to.window;
    const auto dt = distance_transform_sq(inside_mask(to.escape), {w.x.cells, w.y.cells, w.z.cells},
                                          {w.x.step(), w.y.step(), w.z.step()});
    return max_over_inside(from.escape, dt);
}

double hausdorff_discrete(const Raster2D& a, const Raster2D& b) {
    return std::max(directed_distance(a, b), directed_distance(b, a));
}

double hausdorff_discrete(const Raster3D& a, const Raster3D& b) {
    return std::max(directed_distance(a, b), directed_distance(b, a));
}

double directed_distance_naive(const Raster2D& from, const Raster2D& to) {
    check_pair(from, to);
    const auto& w = from.window;
    double worst = 0.0;
    for (std::uint32_t j = 0; j < w.y.cells; ++j) {
        for (std::uint32_t i = 0; i < w.x.cells; ++i) {
            if (!from.inside(i, j)) continue;
            double best = kInf;
            for (std::uint32_t jj = 0; jj < w.y.cells; ++jj) {
                for (std::uint32_t ii = 0; ii < w.x.cells; ++ii) {
                    if (!to.inside(ii, jj)) continue;
                    best = std::min(best, std::hypot(w.x.center(i) - w.x.center(ii), w.y.center(j) - w.y.center(jj)));
                }
            }
            worst = std::max(worst, best);
        }
    }
    return worst;
}

double directed_distance_naive(const Raster3D& from, const Raster3D& to) {
    check_pair(from, to);
    const auto& w = from.window;
    double worst = 0.0;
    for (std::uint32_t k = 0; k < w.z.cells; ++k) {
        for (std::uint32_t j = 0; j < w.y.cells; ++j) {
            for (std::uint32_t i = 0; i < w.x.cells; ++i) {
                if (!from.inside(i, j, k)) continue;
                double best = kInf;
                for (std::uint32_t kk = 0; kk < w.z.cells; ++kk) {
                    for (std::uint32_t jj = 0; jj < w.y.cells; ++jj) {
                        for (std::uint32_t ii = 0; ii < w.x.cells; ++ii) {
                            if (!to.inside(ii, jj, kk)) continue;
                            const double dx = w.x.center(i) - w.x.center(ii);
                            const double dy = w.y.center(j) - w.y.center(jj);
                            const double dz = w.z.center(k) - w.z.center(kk);
                            best = std::min(best, std::sqrt(dx * dx + dy * dy + dz * dz));
                        }
                    }
                }
                worst = std::max(worst, best);
            }
        }
    }
    return worst;
}

}  // namespace tricomplex
