#include "tricomplex/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "tricomplex/algebra.hpp"
#include "tricomplex/dynamics.hpp"
#include "tricomplex/raster.hpp"
#include "tricomplex/realroots.hpp"
#include "tricomplex/sets.hpp"

namespace tricomplex {

namespace {

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

class Report {
public:
    void close(const std::string& name, double expected, double observed, double tol) {
        rows_.push_back({name, num(expected), num(observed), num(tol), std::fabs(expected - observed) <= tol});
    }
    void at_most(const std::string& name, double bound, double observed) {
        rows_.push_back({name, "<= " + num(bound), num(observed), "0", observed <= bound});
    }
    void count(const std::string& name, long expected, long observed) {
        rows_.push_back({name, std::to_string(expected), std::to_string(observed), "0", expected == observed});
    }
    void truth(const std::string& name, bool observed) {
        rows_.push_back({name, "true", observed ? "true" : "false", "0", observed});
    }
    std::vector<CheckRow> take() { return std::move(rows_); }

private:
    std::vector<CheckRow> rows_;
};

// Units as subsets of the generators {i1, i2, i3}; i_a i_b = i_b i_a and i_a^2 = -1.
constexpr unsigned kGeneratorMask[kUnitCount] = {0b000, 0b001, 0b010, 0b100, 0b111, 0b011, 0b101, 0b110};

SignedUnit generator_product(Unit a, Unit b) {
    const unsigned ma = kGeneratorMask[index_of(a)], mb = kGeneratorMask[index_of(b)];
    const unsigned mask = ma ^ mb;
    std::size_t unit = 0;
    while (kGeneratorMask[unit] != mask) ++unit;
    const int sign = (std::popcount(ma & mb) % 2 == 0) ? 1 : -1;
    return {static_cast<Unit>(unit), sign};
}

Tricomplex random_tricomplex(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Tricomplex t;
    for (std::size_t i = 0; i < kUnitCount; ++i) t[i] = u(rng);
    return t;
}

double max_abs_diff(const Tricomplex& a, const Tricomplex& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < kUnitCount; ++i) d = std::max(d, std::fabs(a[i] - b[i]));
    return d;
}

void algebra_suite(Report& r) {
    long mismatches = 0;
    for (Unit a : kAllUnits) {
        for (Unit b : kAllUnits) {
            if (!(unit_product(a, b) == generator_product(a, b))) ++mismatches;
            const SignedUnit e = unit_product(a, b);
            if (!(mul(Tricomplex::basis(a), Tricomplex::basis(b)) == Tricomplex::basis(e.unit, e.sign))) ++mismatches;
        }
    }
    r.count("unit_table_vs_generators", 0, mismatches);

    std::mt19937_64 rng(7);
    double worst_split3 = 0.0, worst_split4 = 0.0, worst_recursive = 0.0, worst_assoc = 0.0, worst_norm = 0.0;
    long asymmetric = 0;
    for (int k = 0; k < 10000; ++k) {
        const Tricomplex a = random_tricomplex(rng), b = random_tricomplex(rng), c = random_tricomplex(rng);
        const Tricomplex ab = mul(a, b);
        const double scale = 1.0 + norm3(a) * norm3(b);
        worst_split3 = std::max(worst_split3, norm3(ab - join3(split3(a) * split3(b))) / scale);
        worst_split4 = std::max(worst_split4, norm3(ab - join4(split4(a) * split4(b))) / scale);
        worst_recursive = std::max(worst_recursive, max_abs_diff(ab, mul_recursive(a, b)) / scale);
        if (!(ab == mul(b, a))) ++asymmetric;
        const Tricomplex left = mul(ab, c), right = mul(a, mul(b, c));
        worst_assoc = std::max(worst_assoc, norm3(left - right) / (1.0 + norm3(left)));
        worst_norm = std::max(worst_norm, std::fabs(norm3(a) - norm3_idempotent(a)) / norm3(a));
    }
    r.at_most("split3_homomorphism_rel", 1e-12, worst_split3);
    r.at_most("split4_homomorphism_rel", 1e-12, worst_split4);
    r.at_most("table_vs_recursive_product", 1e-12, worst_recursive);
    r.count("commutativity_exact_failures", 0, asymmetric);
    r.at_most("associativity_rel", 1e-10, worst_assoc);
    r.at_most("norm_identity_rel", 1e-12, worst_norm);

    const Tricomplex gamma3 = 0.5 * (Tricomplex(1.0) + Tricomplex::basis(Unit::J3));
    const Tricomplex gamma3bar = 0.5 * (Tricomplex(1.0) - Tricomplex::basis(Unit::J3));
    r.close("zero_divisor_gamma3_gamma3bar", 0.0, norm3(mul(gamma3, gamma3bar)), 0.0);
    r.close("pow_i1_squared_real_part", -1.0, pow(Tricomplex::basis(Unit::I1), 2)[0], 0.0);
    const Tricomplex cube = pow(Tricomplex(1.0) + Tricomplex::basis(Unit::J1), 3);
    r.close("pow_1_plus_j1_cubed_real", 4.0, cube[0], 0.0);
    r.close("pow_1_plus_j1_cubed_j1", 4.0, cube[Unit::J1], 0.0);
}

void roots_suite(Report& r) {
    for (int p : {3, 5, 7, 9}) {
        const PolyParams params = PolyParams::make(p);
        const std::string tag = "p" + std::to_string(p);
        r.close("R_at_w1_" + tag, params.m_p + 0.1, eval_R(p, 0.1, params.w1), 1e-12);
        r.close("R_at_w2_" + tag, -params.m_p + 0.1, eval_R(p, 0.1, params.w2), 1e-12);

        std::mt19937_64 rng(11 + p);
        std::uniform_real_distribution<double> inside(-params.m_p * 0.999, params.m_p * 0.999);
        double worst = 0.0;
        long bad_order = 0, bad_count = 0;
        for (int k = 0; k < 200; ++k) {
            const double c = inside(rng);
            const RootReport rep = classify(p, c);
            if (rep.roots.size() != 3) {
                ++bad_count;
                continue;
            }
            const double a1 = rep.roots[0].value, a2 = rep.roots[1].value, a3 = rep.roots[2].value;
            if (!(a1 < params.w1 && params.w1 < a2 && a2 < params.w2 && params.w2 < a3)) ++bad_order;
            for (const Root& root : rep.roots) worst = std::max(worst, std::fabs(eval_R(p, c, root.value)) / (1 + std::fabs(c)));
        }
        r.count("three_roots_count_failures_" + tag, 0, bad_count);
        r.count("three_roots_order_failures_" + tag, 0, bad_order);
        r.at_most("root_residual_" + tag, 1e-12, worst);

        const RootReport at_m = classify(p, params.m_p);
        r.truth("double_root_at_w2_" + tag, at_m.regime == RootRegime::DoubleAtW2 && at_m.roots.size() == 2 &&
                                                at_m.roots[1].value == params.w2 && at_m.roots[1].multiplicity == 2);
        const RootReport at_minus_m = classify(p, -params.m_p);
        r.truth("double_root_at_w1_" + tag, at_minus_m.regime == RootRegime::DoubleAtW1 &&
                                                at_minus_m.roots.size() == 2 && at_minus_m.roots[0].value == params.w1);
    }
    const RootReport rep = classify(3, 0.2);
    // x^3 - x + 0.2 by the trigonometric cubic formula
    const double rr = 2.0 / std::sqrt(3.0), phi = std::acos(-0.6 / rr) / 3.0;
    const double t0 = rr * std::cos(phi), t1 = rr * std::cos(phi - 2.0 * std::numbers::pi / 3.0),
                 t2 = rr * std::cos(phi - 4.0 * std::numbers::pi / 3.0);
    r.close("classify_3_0.2_a1", std::min({t0, t1, t2}), rep.roots.at(0).value, 1e-12);
    r.close("classify_3_0.2_a2", t0 + t1 + t2 - std::min({t0, t1, t2}) - std::max({t0, t1, t2}), rep.roots.at(1).value, 1e-12);
    r.close("classify_3_0.2_a3", std::max({t0, t1, t2}), rep.roots.at(2).value, 1e-12);
    const RootReport neg = classify(3, -0.2);
    r.close("odd_symmetry_a1_vs_a3", -rep.roots.at(2).value, neg.roots.at(0).value, 1e-12);
    r.truth("single_negative_root_c0.5", classify(3, 0.5).regime == RootRegime::OneNegative);
}

void dynamics_suite(Report& r) {
    const PolyParams p3 = PolyParams::make(3);
    r.truth("orbit_c0_bounded", !orbit(Tricomplex(0.0), p3, 1000).escaped());
    r.count("orbit_c2_escape_index", 1, orbit(Tricomplex(2.0), p3, 1000).escape_index.value_or(0));
    r.truth("orbit_c0.5_escapes", orbit(Tricomplex(0.5), p3, 10000).escaped());
    r.truth("orbit_c0.38_bounded", !orbit(Tricomplex(0.38), p3, 10000).escaped());

    std::mt19937_64 rng(3);
    for (int p : {2, 3, 5}) {
        const PolyParams params = PolyParams::make(p);
        std::normal_distribution<double> gauss;
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        long mismatches = 0;
        for (int k = 0; k < 2000; ++k) {
            // uniform in the closed discus: each idempotent component uniform in a 4-ball
            IdempotentPair3 parts;
            for (Bicomplex* b : {&parts.comp1, &parts.comp2}) {
                Bicomplex g{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
                const double radius = params.escape_radius * std::pow(unit(rng), 0.25);
                *b = (radius / norm2(g)) * g;
            }
            const Tricomplex c = join3(parts);
            const OrbitResult fast = orbit(c, params, 200), direct = orbit_direct(c, params, 200);
            if (fast.escape_index != direct.escape_index &&
                std::fabs(direct.final_norm - params.escape_radius) > 1e-9 &&
                std::fabs(fast.final_norm - params.escape_radius) > 1e-9) {
                ++mismatches;
            }
        }
        r.count("direct_vs_split4_escape_p" + std::to_string(p), 0, mismatches);
    }

    double worst = 0.0;
    std::uniform_real_distribution<double> ab(-0.6, 0.6);
    for (int k = 0; k < 500; ++k) {
        const double a = ab(rng), b = ab(rng);
        const OrbitResult esc = orbit_hyper(a, b, 3, 50);
        const int steps = static_cast<int>(esc.escape_index.value_or(50));
        for (int m = 1; m <= steps; ++m) {
            const HyperState t = apply_T(hyper_iterate(a, b, 3, m));
            const double u = real_iterate(3, a - b, 0.0, m), v = real_iterate(3, a + b, 0.0, m);
            worst = std::max({worst, std::fabs(t.x - u) / (1 + std::fabs(u)), std::fabs(t.y - v) / (1 + std::fabs(v))});
        }
    }
    r.at_most("conjugation_T_rel", 1e-10, worst);

    const Complex rotated = rotate_param({0.3, 0.0}, 5, 1);
    r.close("rotate_p5_k1_re", 0.0, rotated.real(), 1e-15);
    r.close("rotate_p5_k1_im", 0.3, rotated.imag(), 1e-15);
    r.truth("monotone_p3_c0.384", monotone_check(0.384, 3, 10000));
    for (int p : {3, 4, 5}) {
        const RotationReport rot = rotation_probe(p, 2000, 1000, 5);
        r.at_most("rotation_disagreement_rate_p" + std::to_string(p), 1e-3, 1.0 - rot.agreement());
    }
}

void sets_suite(Report& r) {
    r.close("m_3", 2.0 / (3.0 * std::sqrt(3.0)), m_p(3), 1e-15);
    r.close("m_2", 0.25, m_p(2), 1e-15);
    for (int p : {3, 5}) {
        const PolyParams params = PolyParams::make(p);
        long disagreements = 0;
        for (int k = 0; k <= 2000; ++k) {
            const double c = -1.0 + k * 0.001;
            if (std::fabs(std::fabs(c) - params.m_p) <= 1e-3) continue;
            const bool bounded = !orbit(Tricomplex(c), params, 100000).escaped();
            if (bounded != real_axis_member(c, p)) ++disagreements;
        }
        r.count("real_axis_oracle_disagreements_p" + std::to_string(p), 0, disagreements);
    }
    {
        const int p = 3, n = 128;
        const double m = m_p(p);
        long disagreements = 0;
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                const double x = -1.0 + (i + 0.5) * 2.0 / n, y = -1.0 + (j + 0.5) * 2.0 / n;
                if (std::fabs(std::fabs(x) + std::fabs(y) - m) <= 1e-3) continue;
                if (hyperbrot_member(x, y, p) == orbit_hyper(x, y, p, 10000).escaped()) ++disagreements;
            }
        }
        r.count("diamond_oracle_disagreements_p3_128", 0, disagreements);
    }
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    long slice_mismatch = 0;
    for (int k = 0; k < 100000; ++k) {
        const double x = u(rng), y = u(rng), z = u(rng);
        if (slice_union_member(x, y, z, 3) != perplexbrot_member(x, y, z, 3)) ++slice_mismatch;
    }
    r.count("slice_union_vs_octahedron", 0, slice_mismatch);
    r.close("hausdorff_limit_p3", 1.0 - 2.0 / (3.0 * std::sqrt(3.0)), hausdorff_limit(3), 1e-15);
    bool decreasing = true;
    for (int p = 5; p <= 21; p += 2) decreasing = decreasing && hausdorff_limit(p) < hausdorff_limit(p - 2);
    r.truth("hausdorff_limit_decreasing", decreasing);
    r.truth("discus_contains_0", discus_contains(Tricomplex(0.0), 3));
    r.truth("discus_excludes_2", !discus_contains(Tricomplex(2.0), 3));
}

void raster_suite(Report& r, unsigned threads) {
    const Window2D w = Window2D::square(-1.1, 1.1, 256);
    const Raster2D h3 = scan2d(PlaneKind::Hyperbrot, 3, w, 10000, {threads});
    const Raster2D unit = rasterize(w, [](double x, double y) { return std::fabs(x) + std::fabs(y) <= 1.0; });
    r.close("hausdorff_unit_diamond_H3_res256", hausdorff_limit(3), hausdorff_discrete(unit, h3), w.cell_diagonal());

    const Window2D small = Window2D::square(-1.0, 1.0, 64);
    const Raster2D one = scan2d(PlaneKind::MultibrotComplex, 3, small, 500, {1});
    const Raster2D four = scan2d(PlaneKind::MultibrotComplex, 3, small, 500, {4});
    r.truth("scan2d_deterministic_1_vs_4", one.escape == four.escape);

    const Window3D cube = Window3D::cube(-1.0, 1.0, 32);
    const Raster3D p3 = scan3d(SliceSpec(Unit::One, Unit::J1, Unit::J2), 3, cube, 10000, {threads});
    const double m = m_p(3), diag = cube.cell_diagonal();
    long far_disagreements = 0;
    for (std::uint32_t k = 0; k < 32; ++k) {
        for (std::uint32_t j = 0; j < 32; ++j) {
            for (std::uint32_t i = 0; i < 32; ++i) {
                const double x = cube.x.center(i), y = cube.y.center(j), z = cube.z.center(k);
                if (p3.inside(i, j, k) == perplexbrot_member(x, y, z, 3)) continue;
                // distance from the centre to the plane |x|+|y|+|z| = m is |l1 - m| / sqrt(3)
                if (std::fabs(std::fabs(x) + std::fabs(y) + std::fabs(z) - m) / std::sqrt(3.0) > diag) ++far_disagreements;
            }
        }
    }
    r.count("perplexbrot_far_disagreements_res32", 0, far_disagreements);
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
    static const std::vector<std::string_view> names{"algebra", "roots", "dynamics", "sets", "raster"};
    return names;
}

std::vector<CheckRow> run_suite(std::string_view suite, unsigned threads) {
    Report r;
    const bool all = suite == "all";
    bool known = all;
    const auto want = [&](std::string_view name) {
        const bool hit = all || suite == name;
        known = known || hit;
        return hit;
    };
    if (want("algebra")) algebra_suite(r);
    if (want("roots")) roots_suite(r);
    if (want("dynamics")) dynamics_suite(r);
    if (want("sets")) sets_suite(r);
    if (want("raster")) raster_suite(r, threads);
    if (!known) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    return r.take();
}

bool all_pass(const std::vector<CheckRow>& rows) {
    for (const CheckRow& row : rows) {
        if (!row.pass) return false;
    }
    return true;
}

CsvWriter to_csv(const std::vector<CheckRow>& rows) {
    CsvWriter csv({"check_name", "expected", "observed", "tolerance", "pass"});
    for (const CheckRow& row : rows) {
        csv.add_row({row.check_name, row.expected, row.observed, row.tolerance, row.pass ? "true" : "false"});
    }
    return csv;
}

}  // namespace tricomplex
