#include "tricomplex/dynamics.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace tricomplex {

namespace {

struct Cx {
    double re;
    double im;
    friend bool operator==(const Cx&, const Cx&) = default;
};

inline Cx operator*(Cx a, Cx b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline Cx operator+(Cx a, Cx b) { return {a.re + b.re, a.im + b.im}; }
inline double abs2(Cx a) { return a.re * a.re + a.im * a.im; }
inline double abs2(double a) { return a * a; }

template <class T>
inline T power(T x, unsigned p) {
    T result = x;
    unsigned bit = 1U << (31 - __builtin_clz(p));
    for (bit >>= 1U; bit != 0; bit >>= 1U) {
        result = result * result;
        if (p & bit) result = result * x;
    }
    return result;
}

// Escape-time kernel over up to four independent components with
// multiplicities. Brent's cycle detection on the exact state.
template <class T>
OrbitResult run_components(const std::array<T, 4>& c, const std::array<double, 4>& weight, std::size_t count,
                           unsigned p, double radius_sq, std::uint32_t max_iter) {
    std::array<T, 4> z{};
    std::array<T, 4> saved{};
    std::uint32_t power_of_two = 1, lambda = 0;
    OrbitResult result;
    double norm_sq = 0.0;
    for (std::uint32_t m = 1; m <= max_iter; ++m) {
        norm_sq = 0.0;
        for (std::size_t k = 0; k < count; ++k) {
            z[k] = power(z[k], p) + c[k];
            norm_sq += weight[k] * abs2(z[k]);
        }
        norm_sq *= 0.25;
        result.iterations_run = m;
        if (norm_sq > radius_sq) {
            result.escape_index = m;
            break;
        }
        bool repeated = true;
        for (std::size_t k = 0; k < count; ++k) repeated = repeated && (z[k] == saved[k]);
        if (repeated) break;
        if (++lambda == power_of_two) {
            saved = z;
            power_of_two *= 2;
            lambda = 0;
        }
    }
    result.final_norm = std::sqrt(norm_sq);
    return result;
}

void require_odd_power(int p) {
    if (p <= 2 || p % 2 == 0) {
        throw std::invalid_argument("hyperbolic iteration needs an odd power p > 2, got " + std::to_string(p));
    }
}

}  // namespace

OrbitResult orbit(const Tricomplex& c, const PolyParams& params, std::uint32_t max_iter) {
    const IdempotentQuad q = split4(c);
    std::array<Cx, 4> unique{};
    std::array<double, 4> weight{};
    std::size_t count = 0;
    bool all_real = true;
    for (const Complex& ck : q.c) {
        const Cx v{ck.real(), ck.imag()};
        std::size_t slot = 0;
        while (slot < count && !(unique[slot] == v)) ++slot;
        if (slot == count) {
            unique[count++] = v;
            all_real = all_real && v.im == 0.0;
        }
        weight[slot] += 1.0;
    }
    const auto p = static_cast<unsigned>(params.p);
    if (all_real) {
        std::array<double, 4> real{};
        for (std::size_t k = 0; k < count; ++k) real[k] = unique[k].re;
        return run_components(real, weight, count, p, params.escape_radius_sq, max_iter);
    }
    return run_components(unique, weight, count, p, params.escape_radius_sq, max_iter);
}

OrbitResult orbit_direct(const Tricomplex& c, const PolyParams& params, std::uint32_t max_iter) {
    Tricomplex eta;
    OrbitResult result;
    double norm_sq = 0.0;
    for (std::uint32_t m = 1; m <= max_iter; ++m) {
        eta = pow(eta, static_cast<unsigned>(params.p)) + c;
        norm_sq = norm3_squared(eta);
        result.iterations_run = m;
        if (norm_sq > params.escape_radius_sq) {
            result.escape_index = m;
            break;
        }
    }
    result.final_norm = std::sqrt(norm_sq);
    return result;
}

HyperState diamond(HyperState a, HyperState b) { return {a.x * b.x + a.y * b.y, a.y * b.x + a.x * b.y}; }

HyperState star(HyperState a, HyperState b) { return {a.x * b.x, a.y * b.y}; }

HyperState apply_T(HyperState s) { return {s.x - s.y, s.x + s.y}; }

HyperState hyper_step(HyperState s, double a, double b, int p) {
    const Hyperbolic h = pow(Hyperbolic{s.x, s.y}, static_cast<unsigned>(p));
    return {h.re + a, h.hy + b};
}

HyperState hyper_iterate(double a, double b, int p, int m) {
    HyperState s;
    for (int k = 0; k < m; ++k) s = hyper_step(s, a, b, p);
    return s;
}

double real_iterate(int p, double c, double x0, int m) {
    double x = x0;
    for (int k = 0; k < m; ++k) x = power(x, static_cast<unsigned>(p)) + c;
    return x;
}

OrbitResult orbit_hyper(double a, double b, int p, std::uint32_t max_iter) {
    require_odd_power(p);
    const PolyParams params = PolyParams::make(p);
    HyperState s, saved;
    std::uint32_t power_of_two = 1, lambda = 0;
    OrbitResult result;
    double norm_sq = 0.0;
    for (std::uint32_t m = 1; m <= max_iter; ++m) {
        s = hyper_step(s, a, b, p);
        norm_sq = s.x * s.x + s.y * s.y;
        result.iterations_run = m;
        if (norm_sq > params.escape_radius_sq) {
            result.escape_index = m;
            break;
        }
        if (s == saved) break;
        if (++lambda == power_of_two) {
            saved = s;
            power_of_two *= 2;
            lambda = 0;
        }
    }
    result.final_norm = std::sqrt(norm_sq);
    return result;
}

OrbitResult orbit_hyper_conjugate(double a, double b, int p, std::uint32_t max_iter) {
    require_odd_power(p);
    const PolyParams params = PolyParams::make(p);
    const std::array<double, 4> c{a - b, a + b, 0.0, 0.0};
    // weight 2 each: norm^2 = (u^2 + v^2) / 2 = 0.25 * (2 u^2 + 2 v^2)
    const std::array<double, 4> weight{2.0, 2.0, 0.0, 0.0};
    return run_components(c, weight, 2, static_cast<unsigned>(p), params.escape_radius_sq, max_iter);
}

Complex rotate_param(Complex c, int p, int k) {
    if (p < 2) throw std::invalid_argument("power must be >= 2");
    const int order = p - 1;
    const int t = ((k % order) + order) % order;
    if ((4 * t) % order == 0) {
        switch ((4 * t) / order) {
            case 0: return c;
            case 1: return {-c.imag(), c.real()};
            case 2: return {-c.real(), -c.imag()};
            default: return {c.imag(), -c.real()};
        }
    }
    const double angle = std::arg(c) + 2.0 * std::numbers::pi * t / order;
    return std::polar(std::abs(c), angle);
}

RotationReport rotation_probe(int p, std::uint32_t n_samples, std::uint32_t max_iter, std::uint64_t seed) {
    const PolyParams params = PolyParams::make(p);
    const double radius = params.escape_radius;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-radius, radius);
    auto near_tie = [&](const OrbitResult& r) { return r.escaped() && std::fabs(r.final_norm - radius) <= 1e-6; };
    RotationReport report;
    while (report.samples < n_samples) {
        const Complex c{u(rng), u(rng)};
        if (std::abs(c) > radius) continue;
        ++report.samples;
        const OrbitResult base = orbit(Tricomplex::from_complex(c), params, max_iter);
        bool tie = near_tie(base), same = true;
        for (int k = 1; k < p - 1; ++k) {
            const OrbitResult r = orbit(Tricomplex::from_complex(rotate_param(c, p, k)), params, max_iter);
            tie = tie || near_tie(r);
            same = same && r.escape_index == base.escape_index;
        }
        if (tie) {
            ++report.excluded;
        } else if (same) {
            ++report.agreed;
        }
    }
    return report;
}

bool monotone_check(double c, int p, int n) {
    if (!(c > 0.0)) throw std::invalid_argument("monotone_check needs c > 0");
    double x = c;  // Q^1(0)
    for (int m = 2; m <= n; ++m) {
        const double next = power(x, static_cast<unsigned>(p)) + c;
        if (next < x) return false;
        if (next == x) return true;
        x = next;
    }
    return true;
}

}  // namespace tricomplex
