#include "tricomplex/realroots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tricomplex {

namespace {

double ipow(double x, int n) {
    double result = 1.0;
    while (n > 0) {
        if (n & 1) result *= x;
        n >>= 1;
        if (n > 0) x *= x;
    }
    return result;
}

void require_odd_power(int p) {
    if (p <= 2 || p % 2 == 0) {
        throw std::invalid_argument("root classification needs an odd power p > 2, got " + std::to_string(p));
    }
}

// Grows |x| geometrically from max(2, |2c|) until R changes sign relative
// to the inner endpoint. direction = +1 searches to the right.
double outer_endpoint(int p, double c, int direction) {
    double x = std::max(2.0, std::fabs(2.0 * c));
    for (int guard = 0; guard < 2100; ++guard) {
        const double r = eval_R(p, c, direction * x);
        if (direction > 0 ? r > 0.0 : r < 0.0) return direction * x;
        x *= 2.0;
    }
    throw std::runtime_error("no sign change found while growing the outer bracket");
}

Root simple_root(int p, double c, Interval bracket) {
    const BisectionTrace t = bisect(p, c, bracket);
    return Root{t.root, 1, bracket};
}

}  // namespace

PolyParams PolyParams::make(int p) {
    if (p < 2) throw std::invalid_argument("power must be >= 2, got " + std::to_string(p));
    PolyParams params;
    params.p = p;
    const double pd = p;
    params.w2 = 1.0 / std::pow(pd, 1.0 / (pd - 1.0));
    params.w1 = -params.w2;
    params.m_p = (pd - 1.0) / std::pow(pd, pd / (pd - 1.0));
    params.escape_radius = std::pow(2.0, 1.0 / (pd - 1.0));
    params.escape_radius_sq = params.escape_radius * params.escape_radius;
    return params;
}

std::string_view regime_name(RootRegime r) {
    switch (r) {
        case RootRegime::ThreeSimple: return "ThreeSimple";
        case RootRegime::DoubleAtW1: return "DoubleAtW1";
        case RootRegime::DoubleAtW2: return "DoubleAtW2";
        case RootRegime::OneNegative: return "OneNegative";
        case RootRegime::OnePositive: return "OnePositive";
        case RootRegime::CZero: return "CZero";
    }
    return "unknown";
}

int RootReport::total_multiplicity() const {
    int total = 0;
    for (const Root& r : roots) total += r.multiplicity;
    return total;
}

double eval_R(int p, double c, double x) { return ipow(x, p) - x + c; }

BisectionTrace bisect(int p, double c, Interval bracket, double tolerance) {
    BisectionTrace trace;
    double lo = bracket.lo, hi = bracket.hi;
    double r_lo = eval_R(p, c, lo);
    const double r_hi = eval_R(p, c, hi);
    if (r_lo == 0.0) return {lo, {lo, lo}, {}};
    if (r_hi == 0.0) return {hi, {hi, hi}, {}};
    if ((r_lo < 0.0) == (r_hi < 0.0)) {
        throw std::invalid_argument("bisection bracket has no sign change");
    }
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        const double r_mid = eval_R(p, c, mid);
        if (r_mid == 0.0) {
            lo = hi = mid;
        } else if ((r_mid < 0.0) == (r_lo < 0.0)) {
            lo = mid;
            r_lo = r_mid;
        } else {
            hi = mid;
        }
        trace.widths.push_back(hi - lo);
        if (hi == lo) break;
    }
    trace.final_bracket = {lo, hi};
    trace.root = std::fabs(eval_R(p, c, lo)) <= std::fabs(eval_R(p, c, hi)) ? lo : hi;
    return trace;
}

RootReport classify(int p, double c) {
    require_odd_power(p);
    const PolyParams params = PolyParams::make(p);
    const double m = params.m_p;
    RootReport report;

    const auto left = [&] { return Interval{outer_endpoint(p, c, -1), params.w1}; };
    const auto middle = Interval{params.w1, params.w2};
    const auto right = [&] { return Interval{params.w2, outer_endpoint(p, c, +1)}; };

    if (c == 0.0) {
        report.regime = RootRegime::CZero;
        report.roots = {{-1.0, 1, left()}, {0.0, 1, middle}, {1.0, 1, right()}};
    } else if (std::fabs(c - m) <= kRegimeTolerance) {
        report.regime = RootRegime::DoubleAtW2;
        report.roots = {simple_root(p, c, left()), {params.w2, 2, {params.w2, params.w2}}};
    } else if (std::fabs(c + m) <= kRegimeTolerance) {
        report.regime = RootRegime::DoubleAtW1;
        report.roots = {{params.w1, 2, {params.w1, params.w1}}, simple_root(p, c, right())};
    } else if (std::fabs(c) < m) {
        report.regime = RootRegime::ThreeSimple;
        report.roots = {simple_root(p, c, left()), simple_root(p, c, middle), simple_root(p, c, right())};
    } else if (c > m) {
        report.regime = RootRegime::OneNegative;
        report.roots = {simple_root(p, c, left())};
    } else {
        report.regime = RootRegime::OnePositive;
        report.roots = {simple_root(p, c, right())};
    }
    return report;
}

RootReport refine_bounds(int p, double c, const RootReport& report) {
    require_odd_power(p);
    const PolyParams params = PolyParams::make(p);
    if (!(std::fabs(c) < params.m_p)) {
        throw std::invalid_argument("refine_bounds needs |c| < m_p");
    }
    RootReport refined = report;
    if (refined.regime == RootRegime::CZero || refined.roots.size() != 3) return refined;

    // Closed comparison: for |c| near the underflow range the root rounds onto +-1.
    if (c < 0.0) {
        Root& a1 = refined.roots.front();
        a1.bracket = {-1.0, params.w1};
        if (!a1.bracket.contains(a1.value)) throw std::logic_error("a1 outside (-1, w1)");
    } else {
        Root& a3 = refined.roots.back();
        a3.bracket = {params.w2, 1.0};
        if (!a3.bracket.contains(a3.value)) throw std::logic_error("a3 outside (w2, 1)");
    }
    return refined;
}

}  // namespace tricomplex
