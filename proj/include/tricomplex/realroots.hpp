#pragma once

// Real roots of R_{p,c}(x) = x^p - x + c for odd p > 2.
//
// R is increasing on (-inf, w1), decreasing on (w1, w2) and increasing on
// (w2, +inf), with R(w1) = m_p + c and R(w2) = -m_p + c. The regime of the
// root set is therefore decided by comparing c against +-m_p.

#include <string_view>
#include <vector>

namespace tricomplex {

/// Constants derived from the power p of z^p + c.
struct PolyParams {
    int p = 0;
    double w1 = 0.0;  // -p^{-1/(p-1)}
    double w2 = 0.0;  // +p^{-1/(p-1)}
    double m_p = 0.0;  // (p-1) / p^{p/(p-1)}
    double escape_radius = 0.0;  // 2^{1/(p-1)}
    double escape_radius_sq = 0.0;

    /// Throws std::invalid_argument for p < 2.
    static PolyParams make(int p);
};

enum class RootRegime { ThreeSimple, DoubleAtW1, DoubleAtW2, OneNegative, OnePositive, CZero };

std::string_view regime_name(RootRegime r);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double x) const { return lo <= x && x <= hi; }
    double width() const { return hi - lo; }
};

struct Root {
    double value = 0.0;
    int multiplicity = 1;
    Interval bracket;  // isolating interval the root was located in
};

struct RootReport {
    RootRegime regime = RootRegime::ThreeSimple;
    std::vector<Root> roots;  // ascending

    int total_multiplicity() const;
};

/// Absolute tolerance used when comparing c with +-m_p.
inline constexpr double kRegimeTolerance = 1e-12;

double eval_R(int p, double c, double x);

/// Throws std::invalid_argument unless p is odd and p > 2.
RootReport classify(int p, double c);

/// Narrows the a1 bracket to (-1, w1) when c < 0 and the a3 bracket to
/// (w2, 1) when c > 0. Throws std::logic_error if a located root falls
/// outside its narrowed bracket, and std::invalid_argument if |c| >= m_p.
RootReport refine_bounds(int p, double c, const RootReport& report);

/// Bisection on a sign change of R_{p,c} inside [lo, hi]. A tolerance of 0
/// runs until no double lies strictly between the endpoints.
struct BisectionTrace {
    double root = 0.0;
    Interval final_bracket;
    std::vector<double> widths;  // bracket width after each step
};

BisectionTrace bisect(int p, double c, Interval bracket, double tolerance = 0.0);

}  // namespace tricomplex
