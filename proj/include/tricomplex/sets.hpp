#pragma once

// Closed-form membership for the odd-power sets and the constants that
// describe them. Boundary points count as members (all characterizations
// are closed sets).

#include <cstdint>
#include <vector>

#include "tricomplex/algebra.hpp"

namespace tricomplex {

/// (p - 1) / p^{p/(p-1)}. Throws std::invalid_argument for p < 2.
double m_p(int p);

/// |x| + |y| <= half_diag, centred at (center_x, 0).
struct DiamondSpec {
    double center_x = 0.0;
    double half_diag = 0.0;

    static DiamondSpec hyperbrot(int p);
    bool contains(double x, double y) const;
};

/// Regular octahedron |x| + |y| + |z| <= half_diag.
struct OctahedronSpec {
    double half_diag = 0.0;
    double edge = 0.0;  // sqrt(2) * half_diag

    static OctahedronSpec perplexbrot(int p);
    static OctahedronSpec unit();
};

bool real_axis_member(double c, int p);
bool hyperbrot_member(double x, double y, int p);
/// Coordinates of c = x + y j1 + z j2.
bool perplexbrot_member(double x, double y, double z, int p);
/// Same set through the slice-union form: x + (y -+ z) j1 both in the
/// Hyperbrot.
bool slice_union_member(double x, double y, double z, int p);

/// Hausdorff distance between the unit diamond and H^p (equally between the
/// unit octahedron and P^p): 1 - m_p.
double hausdorff_limit(int p);

/// Both idempotent components (split3) have bicomplex norm <= 2^{1/(p-1)}.
bool discus_contains(const Tricomplex& c, int p);

/// Predicted values for even powers.
struct ConjectureSpec {
    int p = 0;
    double t_p = 0.0;  // centre of the Hyperbrot square on the real axis
    double l_p = 0.0;  // its diagonal length
    double interval_lo = 0.0;  // -2^{1/(p-1)}
    double interval_hi = 0.0;  // m_p

    /// Throws std::invalid_argument unless p is even and >= 2.
    static ConjectureSpec make(int p);
};

struct ConjectureReport {
    ConjectureSpec predicted;
    double observed_lo = 0.0;  // left end of M^p on the real axis, by bisection
    double observed_hi = 0.0;  // right end
    double observed_center = 0.0;  // (observed_lo + observed_hi) / 2
    double observed_half_height = 0.0;  // Hyperbrot extent along Hy at the centre, by bisection
    std::uint32_t samples = 0;
    std::uint32_t square_disagreements = 0;  // random samples where iteration and predicted square differ
    double bisection_tolerance = 0.0;
};

/// Exploratory probe for even powers; makes no claim of correctness.
/// n_samples random points in the bounding box of the predicted square are
/// compared against hyperbolic iteration.
ConjectureReport conjecture_probe(int p, std::uint32_t n_samples, std::uint32_t max_iter,
                                  double tolerance = 1e-6, std::uint64_t seed = 1);

}  // namespace tricomplex
