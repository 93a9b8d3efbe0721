#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "tricomplex/realroots.hpp"

using namespace tricomplex;

namespace {

// Trigonometric solution of x^3 + a x + b with three real roots, ascending.
std::array<double, 3> cubic_roots(double a, double b) {
    const double r = 2.0 * std::sqrt(-a / 3.0);
    const double phi = std::acos(3.0 * b / (a * r)) / 3.0;
    std::array<double, 3> x{};
    for (int k = 0; k < 3; ++k) x[k] = r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0);
    std::sort(x.begin(), x.end());
    return x;
}

double residual_bound(double c) { return 1e-12 * (1.0 + std::fabs(c)); }

}  // namespace

TEST_CASE("PolyParams constants") {
    const PolyParams p3 = PolyParams::make(3);
    CHECK(p3.w2 == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(p3.w1 == -p3.w2);
    CHECK(p3.m_p == doctest::Approx(2.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-15));
    CHECK(p3.escape_radius == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(PolyParams::make(5).m_p == doctest::Approx(4.0 / std::pow(5.0, 1.25)).epsilon(1e-15));
    CHECK(PolyParams::make(2).m_p == 0.25);
    CHECK(PolyParams::make(2).escape_radius == 2.0);
    CHECK_THROWS_AS(PolyParams::make(1), std::invalid_argument);
    for (int p = 3; p <= 21; p += 2) {
        const PolyParams q = PolyParams::make(p);
        CHECK(q.m_p > 0.0);
        CHECK(q.m_p < 1.0);
        CHECK(q.escape_radius > 1.0);
    }
}

TEST_CASE("eval_R examples") {
    CHECK(eval_R(3, 0.0, 1.0) == 0.0);
    CHECK(eval_R(3, 0.2, 0.0) == 0.2);
    const double w2 = std::pow(5.0, -0.25);
    CHECK(eval_R(5, 0.1, w2) == doctest::Approx(-0.434992).epsilon(1e-6));
}

TEST_CASE("critical values") {
    for (int p : {3, 5, 7, 9, 11}) {
        const PolyParams q = PolyParams::make(p);
        for (double c : {-0.3, 0.0, 0.17}) {
            CHECK(std::fabs(eval_R(p, c, q.w1) - (q.m_p + c)) <= 1e-12);
            CHECK(std::fabs(eval_R(p, c, q.w2) - (-q.m_p + c)) <= 1e-12);
        }
    }
}

TEST_CASE("classify rejects even or small powers") {
    CHECK_THROWS_AS(classify(2, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(classify(4, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(classify(1, 0.1), std::invalid_argument);
}

TEST_CASE("c = 0 gives -1, 0, 1") {
    const RootReport r = classify(3, 0.0);
    CHECK(r.regime == RootRegime::CZero);
    REQUIRE(r.roots.size() == 3);
    CHECK(r.roots[0].value == -1.0);
    CHECK(r.roots[1].value == 0.0);
    CHECK(r.roots[2].value == 1.0);
    CHECK(r.total_multiplicity() == 3);
}

TEST_CASE("three simple roots against the trigonometric cubic formula") {
    const RootReport r = classify(3, 0.2);
    CHECK(r.regime == RootRegime::ThreeSimple);
    REQUIRE(r.roots.size() == 3);
    const auto expected = cubic_roots(-1.0, 0.2);
    for (int k = 0; k < 3; ++k) {
        CHECK(r.roots[k].value == doctest::Approx(expected[k]).epsilon(1e-13));
        CHECK(r.roots[k].multiplicity == 1);
        CHECK(std::fabs(eval_R(3, 0.2, r.roots[k].value)) <= residual_bound(0.2));
    }
    // frozen from the formula above; the three roots must sum to zero
    CHECK(r.roots[0].value == doctest::Approx(-1.088033).epsilon(1e-6));
    CHECK(r.roots[1].value == doctest::Approx(0.209149).epsilon(1e-5));
    CHECK(r.roots[2].value == doctest::Approx(0.878885).epsilon(1e-6));
    CHECK(std::fabs(r.roots[0].value + r.roots[1].value + r.roots[2].value) <= 1e-14);
    const PolyParams q = PolyParams::make(3);
    CHECK(r.roots[0].value < q.w1);
    CHECK(r.roots[1].value > q.w1);
    CHECK(r.roots[1].value < q.w2);
    CHECK(r.roots[2].value > q.w2);
}

TEST_CASE("double roots at the critical points") {
    const PolyParams q = PolyParams::make(3);
    const RootReport hi = classify(3, q.m_p);
    CHECK(hi.regime == RootRegime::DoubleAtW2);
    REQUIRE(hi.roots.size() == 2);
    CHECK(hi.roots[1].value == q.w2);
    CHECK(hi.roots[1].multiplicity == 2);
    CHECK(hi.roots[0].value < -0.577350);
    CHECK(hi.total_multiplicity() == 3);
    // x^3 - x + 2/(3 sqrt 3) = (x - 1/sqrt3)^2 (x + 2/sqrt3)
    CHECK(hi.roots[0].value == doctest::Approx(-2.0 / std::sqrt(3.0)).epsilon(1e-13));

    const RootReport lo = classify(3, -q.m_p);
    CHECK(lo.regime == RootRegime::DoubleAtW1);
    REQUIRE(lo.roots.size() == 2);
    CHECK(lo.roots[0].value == q.w1);
    CHECK(lo.roots[0].multiplicity == 2);
    CHECK(lo.roots[1].value == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-13));
}

TEST_CASE("single root regimes") {
    const RootReport r = classify(3, 0.5);
    CHECK(r.regime == RootRegime::OneNegative);
    REQUIRE(r.roots.size() == 1);
    CHECK(r.roots[0].value < 0.0);
    CHECK(std::fabs(eval_R(3, 0.5, r.roots[0].value)) <= residual_bound(0.5));

    const RootReport n = classify(5, -3.0);
    CHECK(n.regime == RootRegime::OnePositive);
    REQUIRE(n.roots.size() == 1);
    CHECK(n.roots[0].value > PolyParams::make(5).w2);
    CHECK(std::fabs(eval_R(5, -3.0, n.roots[0].value)) <= residual_bound(3.0));

    // large |c| needs several doublings of the outer bracket
    const RootReport big = classify(7, 1e6);
    REQUIRE(big.roots.size() == 1);
    CHECK(std::fabs(eval_R(7, 1e6, big.roots[0].value)) <= 1e-12 * 1e6 * 10);
}

TEST_CASE("random three-root cases with odd symmetry") {
    std::mt19937_64 rng(11);
    for (int p : {3, 5, 7, 9}) {
        const PolyParams q = PolyParams::make(p);
        std::uniform_real_distribution<double> u(-q.m_p, q.m_p);
        for (int trial = 0; trial < 300; ++trial) {
            const double c = u(rng);
            if (std::fabs(std::fabs(c) - q.m_p) <= 2 * kRegimeTolerance || c == 0.0) continue;
            const RootReport r = classify(p, c);
            REQUIRE(r.regime == RootRegime::ThreeSimple);
            REQUIRE(r.roots.size() == 3);
            for (const Root& root : r.roots) {
                CHECK(std::fabs(eval_R(p, c, root.value)) <= residual_bound(c));
                CHECK(root.bracket.contains(root.value));
            }
            CHECK(r.roots[0].value < q.w1);
            CHECK(r.roots[2].value > q.w2);
            const RootReport mirror = classify(p, -c);
            for (int k = 0; k < 3; ++k) CHECK(std::fabs(mirror.roots[k].value + r.roots[2 - k].value) <= 1e-12);

            const RootReport refined = refine_bounds(p, c, r);
            if (c < 0) {
                CHECK(refined.roots[0].bracket.lo == -1.0);
                CHECK(refined.roots[0].bracket.hi == q.w1);
            } else {
                CHECK(refined.roots[2].bracket.lo == q.w2);
                CHECK(refined.roots[2].bracket.hi == 1.0);
            }
            // sign structure between the outer roots and the critical points
            for (int s = 1; s < 10; ++s) {
                const double t = s / 10.0;
                CHECK(eval_R(p, c, r.roots[0].value + t * (q.w1 - r.roots[0].value)) > 0.0);
                CHECK(eval_R(p, c, q.w2 + t * (r.roots[2].value - q.w2)) < 0.0);
            }
        }
    }
}

TEST_CASE("refine_bounds examples and preconditions") {
    const RootReport pos = refine_bounds(3, 0.2, classify(3, 0.2));
    CHECK(pos.roots[2].value == doctest::Approx(0.878885).epsilon(1e-6));
    CHECK(pos.roots[2].bracket.contains(pos.roots[2].value));
    const RootReport neg = refine_bounds(3, -0.2, classify(3, -0.2));
    CHECK(neg.roots[0].value == doctest::Approx(-0.878885).epsilon(1e-6));
    CHECK(neg.roots[0].bracket.lo == -1.0);
    CHECK_THROWS_AS(refine_bounds(3, 0.5, classify(3, 0.5)), std::invalid_argument);
    const PolyParams q = PolyParams::make(3);
    CHECK_THROWS_AS(refine_bounds(3, q.m_p, classify(3, q.m_p)), std::invalid_argument);
    // a fabricated report placing a3 beyond 1 violates the bracket
    RootReport bogus = classify(3, 0.2);
    bogus.roots[2].value = 1.5;
    CHECK_THROWS_AS(refine_bounds(3, 0.2, bogus), std::logic_error);
}

TEST_CASE("bisection widths halve down to 1e-13") {
    const BisectionTrace t = bisect(3, 0.2, {0.6, 1.0});
    REQUIRE(t.widths.size() > 10);
    double prev = 0.4;
    for (double w : t.widths) {
        CHECK(w == doctest::Approx(prev / 2.0).epsilon(1e-12));
        prev = w;
        if (w < 1e-12) break;
    }
    CHECK(t.final_bracket.width() <= 1e-13);
    CHECK(t.final_bracket.contains(t.root));
    CHECK(t.root == doctest::Approx(cubic_roots(-1.0, 0.2)[2]).epsilon(1e-14));

    const BisectionTrace coarse = bisect(3, 0.2, {0.6, 1.0}, 1e-6);
    CHECK(coarse.final_bracket.width() <= 1e-6);
    CHECK(coarse.final_bracket.width() > 2.5e-7);
}
