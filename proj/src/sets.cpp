#include "tricomplex/sets.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "tricomplex/dynamics.hpp"
#include "tricomplex/realroots.hpp"

namespace tricomplex {

namespace {

void require_odd_power(int p) {
    if (p <= 2 || p % 2 == 0) {
        throw std::invalid_argument("closed-form membership needs an odd power p > 2, got " + std::to_string(p));
    }
}

// Largest/smallest parameter along a ray where the orbit stays bounded.
// `bounded_at(inside)` must hold and `bounded_at(outside)` must not.
template <class Pred>
double bisect_boundary(Pred bounded_at, double inside, double outside, double tolerance) {
    while (std::fabs(outside - inside) > tolerance) {
        const double mid = 0.5 * (inside + outside);
        if (mid == inside || mid == outside) break;
        (bounded_at(mid) ? inside : outside) = mid;
    }
    return 0.5 * (inside + outside);
}

}  // namespace

double m_p(int p) { return PolyParams::make(p).m_p; }

DiamondSpec DiamondSpec::hyperbrot(int p) {
    require_odd_power(p);
    return {0.0, m_p(p)};
}

bool DiamondSpec::contains(double x, double y) const { return std::fabs(x - center_x) + std::fabs(y) <= half_diag; }

OctahedronSpec OctahedronSpec::perplexbrot(int p) {
    require_odd_power(p);
    const double m = m_p(p);
    return {m, std::sqrt(2.0) * m};
}

OctahedronSpec OctahedronSpec::unit() { return {1.0, std::sqrt(2.0)}; }

bool real_axis_member(double c, int p) {
    require_odd_power(p);
    return std::fabs(c) <= m_p(p);
}

bool hyperbrot_member(double x, double y, int p) {
    require_odd_power(p);
    return std::fabs(x) + std::fabs(y) <= m_p(p);
}

bool perplexbrot_member(double x, double y, double z, int p) {
    require_odd_power(p);
    // |x| + (|y| + |z|): the grouping matches max(|y + z|, |y - z|) = |y| + |z|
    // term for term, so the slice-union form agrees bit for bit.
    return std::fabs(x) + (std::fabs(y) + std::fabs(z)) <= m_p(p);
}

bool slice_union_member(double x, double y, double z, int p) {
    return hyperbrot_member(x, y + z, p) && hyperbrot_member(x, y - z, p);
}

double hausdorff_limit(int p) {
    require_odd_power(p);
    return 1.0 - m_p(p);
}

bool discus_contains(const Tricomplex& c, int p) {
    const PolyParams params = PolyParams::make(p);
    const IdempotentPair3 parts = split3(c);
    return norm2_squared(parts.comp1) <= params.escape_radius_sq &&
           norm2_squared(parts.comp2) <= params.escape_radius_sq;
}

ConjectureSpec ConjectureSpec::make(int p) {
    if (p < 2 || p % 2 != 0) throw std::invalid_argument("conjecture probe needs an even power p >= 2");
    const double pd = p;
    const double root_p = std::pow(pd, 1.0 / (pd - 1.0));
    const double root_2p = std::pow(2.0 * pd, 1.0 / (pd - 1.0));
    ConjectureSpec spec;
    spec.p = p;
    spec.t_p = ((1.0 - root_2p) * pd - 1.0) / (2.0 * pd * root_p);
    spec.l_p = ((root_2p + 1.0) * pd - 1.0) / (pd * root_p);
    spec.interval_lo = -std::pow(2.0, 1.0 / (pd - 1.0));
    spec.interval_hi = m_p(p);
    return spec;
}

ConjectureReport conjecture_probe(int p, std::uint32_t n_samples, std::uint32_t max_iter, double tolerance,
                                  std::uint64_t seed) {
    ConjectureReport report;
    report.predicted = ConjectureSpec::make(p);
    report.samples = n_samples;
    report.bisection_tolerance = tolerance;
    const PolyParams params = PolyParams::make(p);
    const double radius = params.escape_radius;

    const auto bounded_real = [&](double c) { return !orbit(Tricomplex(c), params, max_iter).escaped(); };
    report.observed_hi = bisect_boundary(bounded_real, 0.0, 2.0 * radius, tolerance);
    report.observed_lo = bisect_boundary(bounded_real, 0.0, -2.0 * radius, tolerance);
    report.observed_center = 0.5 * (report.observed_lo + report.observed_hi);

    const auto bounded_hyper = [&](double x, double y) {
        return !orbit(Tricomplex::from_hyperbolic({x, y}), params, max_iter).escaped();
    };
    const double center = report.observed_center;
    report.observed_half_height =
        bisect_boundary([&](double y) { return bounded_hyper(center, y); }, 0.0, 2.0 * radius, tolerance);

    const DiamondSpec square{report.predicted.t_p, 0.5 * report.predicted.l_p};
    const double half_box = 0.6 * report.predicted.l_p;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (std::uint32_t k = 0; k < n_samples; ++k) {
        const double x = square.center_x + half_box * unit(rng);
        const double y = half_box * unit(rng);
        if (square.contains(x, y) != bounded_hyper(x, y)) ++report.square_disagreements;
    }
    return report;
}

}  // namespace tricomplex
