#pragma once

// Escape-time iteration of Q_{p,c}(eta) = eta^p + c from eta = 0.
//
// An orbit has escaped at step m when norm3(Q^m(0)) > 2^{1/(p-1)}; the
// comparison is done on squared norms. "Bounded" always means bounded
// within the iteration budget, never a proof of membership.

#include <cstdint>
#include <optional>

#include "tricomplex/algebra.hpp"
#include "tricomplex/realroots.hpp"

namespace tricomplex {

struct OrbitResult {
    std::optional<std::uint32_t> escape_index;  // first m >= 1 with norm > radius
    double final_norm = 0.0;                    // norm of the last computed iterate
    std::uint32_t iterations_run = 0;

    bool escaped() const { return escape_index.has_value(); }
};

/// Fast path: iterates the four complex components of split4(c)
/// independently and evaluates the tricomplex norm through
/// norm3^2 = sum |c_k|^2 / 4. Components with identical constants are
/// iterated once; real constants use real arithmetic. An exactly repeated
/// state ends the loop early as bounded (the orbit is periodic from then
/// on), in which case iterations_run < max_iter.
OrbitResult orbit(const Tricomplex& c, const PolyParams& params, std::uint32_t max_iter);

/// Reference path: eta <- pow(eta, p) + c in the eight-coefficient basis.
OrbitResult orbit_direct(const Tricomplex& c, const PolyParams& params, std::uint32_t max_iter);

/// Vector of R^2 iterated under the diamond product
/// (u, v) <> (x, y) = (ux + vy, vx + uy), the hyperbolic product.
struct HyperState {
    double x = 0.0;
    double y = 0.0;
    friend constexpr bool operator==(const HyperState&, const HyperState&) = default;
};

HyperState diamond(HyperState a, HyperState b);
/// Componentwise product (u, v) * (x, y) = (ux, vy).
HyperState star(HyperState a, HyperState b);
/// T = [[1, -1], [1, 1]], a ring isomorphism from (R^2, <>) to (R^2, *).
HyperState apply_T(HyperState s);

/// H_{p,c}(s) = s <>^p + (a, b).
HyperState hyper_step(HyperState s, double a, double b, int p);
/// H_{p,c}^m(0).
HyperState hyper_iterate(double a, double b, int p, int m);
/// Q_{p,c}^m(x0) over the reals.
double real_iterate(int p, double c, double x0, int m);

/// Escape of c = a + b j under the diamond-power map. Throws unless p is odd and > 2.
OrbitResult orbit_hyper(double a, double b, int p, std::uint32_t max_iter);
/// Same decision through the T-conjugated pair of real orbits Q_{p,a-b}, Q_{p,a+b};
/// the norm is sqrt((u^2 + v^2) / 2), identical to the hyperbolic norm.
OrbitResult orbit_hyper_conjugate(double a, double b, int p, std::uint32_t max_iter);

/// |c| exp(i (arg c + 2 k pi / (p - 1))), k reduced mod p - 1. Rotations by
/// whole quarter turns are applied exactly.
Complex rotate_param(Complex c, int p, int k);

/// Escape-index agreement between c and its p - 2 nontrivial rotations, c
/// uniform in the disk |c| <= 2^{1/(p-1)}. A sample counts as agreeing when
/// every rotation has the same escape index; samples where some orbit escaped
/// with a deciding norm within 1e-6 of the radius are excluded.
struct RotationReport {
    std::uint32_t samples = 0;
    std::uint32_t excluded = 0;
    std::uint32_t agreed = 0;
    double agreement() const { return samples == excluded ? 1.0 : double(agreed) / (samples - excluded); }
};

RotationReport rotation_probe(int p, std::uint32_t n_samples, std::uint32_t max_iter, std::uint64_t seed = 1);

/// True iff the first n real iterates Q^m(0), m = 1..n, never decrease and
/// increase strictly until they reach a floating-point fixed point.
/// Throws std::invalid_argument unless c > 0.
bool monotone_check(double c, int p, int n);

}  // namespace tricomplex
