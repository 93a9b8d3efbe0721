#include "tricomplex/algebra.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tricomplex {

namespace {

constexpr std::array<std::string_view, kUnitCount> kUnitNames{"1", "i1", "i2", "i3", "i4", "j1", "j2", "j3"};

using U = Unit;

// Products of tricomplex imaginary units, transcribed row by row.
constexpr SignedUnit kProducts[kUnitCount][kUnitCount] = {
    // 1
    {{U::One, 1}, {U::I1, 1}, {U::I2, 1}, {U::I3, 1}, {U::I4, 1}, {U::J1, 1}, {U::J2, 1}, {U::J3, 1}},
    // i1
    {{U::I1, 1}, {U::One, -1}, {U::J1, 1}, {U::J2, 1}, {U::J3, -1}, {U::I2, -1}, {U::I3, -1}, {U::I4, 1}},
    // i2
    {{U::I2, 1}, {U::J1, 1}, {U::One, -1}, {U::J3, 1}, {U::J2, -1}, {U::I1, -1}, {U::I4, 1}, {U::I3, -1}},
    // i3
    {{U::I3, 1}, {U::J2, 1}, {U::J3, 1}, {U::One, -1}, {U::J1, -1}, {U::I4, 1}, {U::I1, -1}, {U::I2, -1}},
    // i4
    {{U::I4, 1}, {U::J3, -1}, {U::J2, -1}, {U::J1, -1}, {U::One, -1}, {U::I3, 1}, {U::I2, 1}, {U::I1, 1}},
    // j1
    {{U::J1, 1}, {U::I2, -1}, {U::I1, -1}, {U::I4, 1}, {U::I3, 1}, {U::One, 1}, {U::J3, -1}, {U::J2, -1}},
    // j2
    {{U::J2, 1}, {U::I3, -1}, {U::I4, 1}, {U::I1, -1}, {U::I2, 1}, {U::J3, -1}, {U::One, 1}, {U::J1, -1}},
    // j3
    {{U::J3, 1}, {U::I4, 1}, {U::I3, -1}, {U::I2, -1}, {U::I1, 1}, {U::J2, -1}, {U::J1, -1}, {U::One, 1}},
};

Complex cmul(Complex a, Complex b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace

std::string_view unit_name(Unit u) { return kUnitNames[index_of(u)]; }

std::optional<Unit> parse_unit(std::string_view name) {
    for (std::size_t i = 0; i < kUnitCount; ++i) {
        if (kUnitNames[i] == name) return static_cast<Unit>(i);
    }
    return std::nullopt;
}

SignedUnit unit_product(Unit a, Unit b) { return kProducts[index_of(a)][index_of(b)]; }

// --- Hyperbolic -------------------------------------------------------------

Hyperbolic operator+(Hyperbolic a, Hyperbolic b) { return {a.re + b.re, a.hy + b.hy}; }
Hyperbolic operator-(Hyperbolic a, Hyperbolic b) { return {a.re - b.re, a.hy - b.hy}; }
Hyperbolic operator*(Hyperbolic a, Hyperbolic b) {
    return {a.re * b.re + a.hy * b.hy, a.re * b.hy + a.hy * b.re};
}

Hyperbolic pow(Hyperbolic a, unsigned m) {
    Hyperbolic result{1.0, 0.0};
    while (m > 0) {
        if (m & 1U) result = result * a;
        m >>= 1U;
        if (m > 0) a = a * a;
    }
    return result;
}

// --- Bicomplex --------------------------------------------------------------

Bicomplex operator+(const Bicomplex& a, const Bicomplex& b) {
    return {a.z1re + b.z1re, a.z1im + b.z1im, a.z2re + b.z2re, a.z2im + b.z2im};
}

Bicomplex operator-(const Bicomplex& a, const Bicomplex& b) {
    return {a.z1re - b.z1re, a.z1im - b.z1im, a.z2re - b.z2re, a.z2im - b.z2im};
}

Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
    const Complex z1 = a.z1(), z2 = a.z2(), w1 = b.z1(), w2 = b.z2();
    return Bicomplex::from_parts(cmul(z1, w1) - cmul(z2, w2), cmul(z1, w2) + cmul(z2, w1));
}

Bicomplex operator*(double s, const Bicomplex& a) { return {s * a.z1re, s * a.z1im, s * a.z2re, s * a.z2im}; }

Bicomplex times_i2(const Bicomplex& a) { return {-a.z2re, -a.z2im, a.z1re, a.z1im}; }

double norm2_squared(const Bicomplex& a) {
    return a.z1re * a.z1re + a.z1im * a.z1im + a.z2re * a.z2re + a.z2im * a.z2im;
}

double norm2(const Bicomplex& a) { return std::sqrt(norm2_squared(a)); }

// --- Tricomplex -------------------------------------------------------------

Tricomplex Tricomplex::basis(Unit u, double scale) {
    Tricomplex t;
    t.x_[index_of(u)] = scale;
    return t;
}

Tricomplex Tricomplex::from_bicomplex(const Bicomplex& zeta1, const Bicomplex& zeta2) {
    // zeta1 = x0 + x1 i1 + (x2 + x5 i1) i2, zeta2 = x3 + x6 i1 + (x7 + x4 i1) i2.
    return Tricomplex({zeta1.z1re, zeta1.z1im, zeta1.z2re, zeta2.z1re, zeta2.z2im, zeta1.z2im, zeta2.z1im,
                       zeta2.z2re});
}

Bicomplex Tricomplex::zeta1() const { return {x_[0], x_[1], x_[2], x_[5]}; }
Bicomplex Tricomplex::zeta2() const { return {x_[3], x_[6], x_[7], x_[4]}; }

Tricomplex& Tricomplex::operator+=(const Tricomplex& o) {
    for (std::size_t i = 0; i < kUnitCount; ++i) x_[i] += o.x_[i];
    return *this;
}

Tricomplex& Tricomplex::operator-=(const Tricomplex& o) {
    for (std::size_t i = 0; i < kUnitCount; ++i) x_[i] -= o.x_[i];
    return *this;
}

Tricomplex operator*(double s, Tricomplex a) {
    for (auto& v : a.x_) v *= s;
    return a;
}

Tricomplex mul(const Tricomplex& a, const Tricomplex& b) {
    std::array<double, kUnitCount> out{};
    for (std::size_t i = 0; i < kUnitCount; ++i) {
        const SignedUnit d = kProducts[i][i];
        out[index_of(d.unit)] += d.sign * (a[i] * b[i]);
        for (std::size_t j = i + 1; j < kUnitCount; ++j) {
            const SignedUnit e = kProducts[i][j];
            out[index_of(e.unit)] += e.sign * (a[i] * b[j] + a[j] * b[i]);
        }
    }
    return Tricomplex(out);
}

Tricomplex mul_recursive(const Tricomplex& a, const Tricomplex& b) {
    const Bicomplex z1 = a.zeta1(), z2 = a.zeta2(), z3 = b.zeta1(), z4 = b.zeta2();
    return Tricomplex::from_bicomplex(z1 * z3 - z2 * z4, z1 * z4 + z2 * z3);
}

Tricomplex pow(const Tricomplex& a, unsigned m) {
    Tricomplex result(1.0);
    Tricomplex base = a;
    while (m > 0) {
        if (m & 1U) result = mul(result, base);
        m >>= 1U;
        if (m > 0) base = mul(base, base);
    }
    return result;
}

double norm3_squared(const Tricomplex& a) {
    double s = 0.0;
    for (double v : a.coeffs()) s += v * v;
    return s;
}

double norm3(const Tricomplex& a) { return std::sqrt(norm3_squared(a)); }

double norm3_idempotent(const Tricomplex& a) {
    const IdempotentPair3 p = split3(a);
    return std::sqrt(norm2_squared(p.comp1) + norm2_squared(p.comp2)) / std::sqrt(2.0);
}

// --- idempotent representations --------------------------------------------

IdempotentPair3 split3(const Tricomplex& a) {
    const Bicomplex z1 = a.zeta1();
    const Bicomplex z2i2 = times_i2(a.zeta2());
    return {z1 - z2i2, z1 + z2i2};
}

Tricomplex join3(const IdempotentPair3& p) {
    const Bicomplex zeta1 = 0.5 * (p.comp1 + p.comp2);
    const Bicomplex zeta2 = times_i2(0.5 * (p.comp1 - p.comp2));
    return Tricomplex::from_bicomplex(zeta1, zeta2);
}

IdempotentPair3 operator*(const IdempotentPair3& a, const IdempotentPair3& b) {
    return {a.comp1 * b.comp1, a.comp2 * b.comp2};
}

std::array<Complex, 2> split2(const Bicomplex& b) {
    return {Complex{b.z1re + b.z2im, b.z1im - b.z2re}, Complex{b.z1re - b.z2im, b.z1im + b.z2re}};
}

Bicomplex join2(Complex first, Complex second) {
    const Complex half_sum = 0.5 * (first + second);
    const Complex half_diff = 0.5 * (first - second);
    // z2 = i (first - second) / 2
    return {half_sum.real(), half_sum.imag(), -half_diff.imag(), half_diff.real()};
}

IdempotentQuad split4(const Tricomplex& a) {
    const IdempotentPair3 p = split3(a);
    const auto lo = split2(p.comp1);
    const auto hi = split2(p.comp2);
    return {{lo[0], lo[1], hi[0], hi[1]}};
}

Tricomplex join4(const IdempotentQuad& q) {
    return join3({join2(q.c[0], q.c[1]), join2(q.c[2], q.c[3])});
}

IdempotentQuad operator*(const IdempotentQuad& a, const IdempotentQuad& b) {
    IdempotentQuad out;
    for (std::size_t k = 0; k < 4; ++k) out.c[k] = cmul(a.c[k], b.c[k]);
    return out;
}

// --- slices -----------------------------------------------------------------

SliceSpec::SliceSpec(Unit x_unit, Unit y_unit, Unit z_unit) : units_{x_unit, y_unit, z_unit} {
    if (x_unit == y_unit || x_unit == z_unit || y_unit == z_unit) {
        throw std::invalid_argument("slice units must be distinct: " + to_string());
    }
}

SliceSpec SliceSpec::parse(std::string_view text) {
    std::array<Unit, 3> units{};
    std::size_t count = 0;
    while (true) {
        const auto comma = text.find(',');
        const std::string_view token = text.substr(0, comma);
        const auto unit = parse_unit(token);
        if (!unit) throw std::invalid_argument("unknown unit name '" + std::string(token) + "'");
        if (count == 3) throw std::invalid_argument("slice needs exactly three units");
        units[count++] = *unit;
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (count != 3) throw std::invalid_argument("slice needs exactly three units");
    return SliceSpec(units[0], units[1], units[2]);
}

std::string SliceSpec::to_string() const {
    std::string s;
    for (std::size_t k = 0; k < 3; ++k) {
        if (k) s += ',';
        s += unit_name(units_[k]);
    }
    return s;
}

Tricomplex embed_slice(const SliceSpec& s, double x, double y, double z) {
    Tricomplex t;
    t[index_of(s.units()[0])] = x;
    t[index_of(s.units()[1])] = y;
    t[index_of(s.units()[2])] = z;
    return t;
}

std::string to_string(const Tricomplex& a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", a[0]);
    std::string s = buf;
    for (std::size_t i = 1; i < kUnitCount; ++i) {
        std::snprintf(buf, sizeof buf, " %c %.9f %s", a[i] < 0 ? '-' : '+', std::fabs(a[i]),
                      kUnitNames[i].data());
        s += buf;
    }
    return s;
}

}  // namespace tricomplex
