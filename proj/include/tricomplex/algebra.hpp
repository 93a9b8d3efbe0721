#pragma once

// Tricomplex numbers M(3) and the subalgebras used by the dynamics code:
// bicomplex M(2), hyperbolic D and the idempotent splittings that make
// multiplication componentwise.
//
// Coefficient order is frozen everywhere (storage, I/O, CLI):
//   x0 x1  x2  x3  x4  x5  x6  x7
//   1  i1  i2  i3  i4  j1  j2  j3
// with j1 = i1 i2, j2 = i1 i3, j3 = i2 i3, i4 = i1 i2 i3.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tricomplex {

using Complex = std::complex<double>;

enum class Unit : std::uint8_t { One = 0, I1, I2, I3, I4, J1, J2, J3 };

inline constexpr std::size_t kUnitCount = 8;
inline constexpr std::array<Unit, kUnitCount> kAllUnits{
    Unit::One, Unit::I1, Unit::I2, Unit::I3, Unit::I4, Unit::J1, Unit::J2, Unit::J3};

constexpr std::size_t index_of(Unit u) { return static_cast<std::size_t>(u); }

std::string_view unit_name(Unit u);
// Accepts "1", "i1".."i4", "j1".."j3".
std::optional<Unit> parse_unit(std::string_view name);

/// Signed basis unit: the product of two basis units is always +-(one unit).
struct SignedUnit {
    Unit unit;
    int sign;
    friend constexpr bool operator==(SignedUnit, SignedUnit) = default;
};

/// Table of products of basis units, row = left factor, column = right.
SignedUnit unit_product(Unit a, Unit b);

/// Hyperbolic (split-complex) number re + hy j with j^2 = +1.
struct Hyperbolic {
    double re = 0.0;
    double hy = 0.0;

    friend constexpr bool operator==(const Hyperbolic&, const Hyperbolic&) = default;
};

Hyperbolic operator+(Hyperbolic a, Hyperbolic b);
Hyperbolic operator-(Hyperbolic a, Hyperbolic b);
Hyperbolic operator*(Hyperbolic a, Hyperbolic b);
Hyperbolic pow(Hyperbolic a, unsigned m);

/// Bicomplex number z1 + z2 i2 with z1, z2 in C(i1). As a real vector the
/// coefficients are those of 1, i1, i2, j1.
struct Bicomplex {
    double z1re = 0.0;
    double z1im = 0.0;
    double z2re = 0.0;
    double z2im = 0.0;

    Complex z1() const { return {z1re, z1im}; }
    Complex z2() const { return {z2re, z2im}; }
    static Bicomplex from_parts(Complex z1, Complex z2) {
        return {z1.real(), z1.imag(), z2.real(), z2.imag()};
    }

    friend constexpr bool operator==(const Bicomplex&, const Bicomplex&) = default;
};

Bicomplex operator+(const Bicomplex& a, const Bicomplex& b);
Bicomplex operator-(const Bicomplex& a, const Bicomplex& b);
Bicomplex operator*(const Bicomplex& a, const Bicomplex& b);
Bicomplex operator*(double s, const Bicomplex& a);
// Multiplication by i2: (z1 + z2 i2) i2 = -z2 + z1 i2. Exact.
Bicomplex times_i2(const Bicomplex& a);
double norm2(const Bicomplex& a);
double norm2_squared(const Bicomplex& a);

class Tricomplex {
public:
    constexpr Tricomplex() = default;
    constexpr explicit Tricomplex(const std::array<double, kUnitCount>& coeffs) : x_(coeffs) {}
    constexpr Tricomplex(double real) : x_{real, 0, 0, 0, 0, 0, 0, 0} {}  // NOLINT: implicit by design of the ring

    static Tricomplex basis(Unit u, double scale = 1.0);
    /// eta = zeta1 + zeta2 i3.
    static Tricomplex from_bicomplex(const Bicomplex& zeta1, const Bicomplex& zeta2);
    static Tricomplex from_complex(Complex z) { return basis(Unit::One, z.real()) + basis(Unit::I1, z.imag()); }
    static Tricomplex from_hyperbolic(Hyperbolic h) { return basis(Unit::One, h.re) + basis(Unit::J1, h.hy); }

    Bicomplex zeta1() const;
    Bicomplex zeta2() const;

    constexpr double operator[](std::size_t i) const { return x_[i]; }
    constexpr double& operator[](std::size_t i) { return x_[i]; }
    constexpr double operator[](Unit u) const { return x_[index_of(u)]; }
    constexpr const std::array<double, kUnitCount>& coeffs() const { return x_; }

    Tricomplex& operator+=(const Tricomplex& o);
    Tricomplex& operator-=(const Tricomplex& o);

    friend Tricomplex operator+(Tricomplex a, const Tricomplex& b) { return a += b; }
    friend Tricomplex operator-(Tricomplex a, const Tricomplex& b) { return a -= b; }
    friend Tricomplex operator*(double s, Tricomplex a);
    friend constexpr bool operator==(const Tricomplex&, const Tricomplex&) = default;

private:
    std::array<double, kUnitCount> x_{};
};

/// Table-driven product. Exactly commutative: the pair (i, j) and (j, i)
/// contributions are combined as a_i b_j + a_j b_i before accumulation.
Tricomplex mul(const Tricomplex& a, const Tricomplex& b);
inline Tricomplex operator*(const Tricomplex& a, const Tricomplex& b) { return mul(a, b); }

/// Product through the coupled-bicomplex form
/// (z1 + z2 i3)(z3 + z4 i3) = (z1 z3 - z2 z4) + (z1 z4 + z2 z3) i3.
/// Kept as an independent route for cross-checking the table.
Tricomplex mul_recursive(const Tricomplex& a, const Tricomplex& b);

/// Binary exponentiation; pow(a, 0) = 1.
Tricomplex pow(const Tricomplex& a, unsigned m);

/// Euclidean norm over the eight coefficients.
double norm3(const Tricomplex& a);
double norm3_squared(const Tricomplex& a);
/// Same norm from the idempotent components:
/// sqrt(|zeta1 - zeta2 i2|^2 + |zeta1 + zeta2 i2|^2) / sqrt(2).
double norm3_idempotent(const Tricomplex& a);

/// eta = comp1 gamma3 + comp2 gamma3bar, gamma3 = (1 + j3)/2.
struct IdempotentPair3 {
    Bicomplex comp1;
    Bicomplex comp2;
};

IdempotentPair3 split3(const Tricomplex& a);
Tricomplex join3(const IdempotentPair3& p);
IdempotentPair3 operator*(const IdempotentPair3& a, const IdempotentPair3& b);

/// Idempotent split of a bicomplex number over gamma2 = (1 + j1)/2:
/// z1 + z2 i2 = (z1 - z2 i1) gamma2 + (z1 + z2 i1) gamma2bar.
std::array<Complex, 2> split2(const Bicomplex& b);
Bicomplex join2(Complex first, Complex second);

/// Double idempotent split. Component order:
///   c1 ~ gamma3 gamma2, c2 ~ gamma3 gamma2bar, c3 ~ gamma3bar gamma2, c4 ~ gamma3bar gamma2bar.
/// Multiplication in M(3) is componentwise complex multiplication here, and
/// norm3(eta)^2 = (|c1|^2 + |c2|^2 + |c3|^2 + |c4|^2) / 4.
struct IdempotentQuad {
    std::array<Complex, 4> c;
};

IdempotentQuad split4(const Tricomplex& a);
Tricomplex join4(const IdempotentQuad& q);
IdempotentQuad operator*(const IdempotentQuad& a, const IdempotentQuad& b);

/// Ordered triple of distinct units spanning a principal 3D slice. The
/// first unit carries the x coordinate, the second y, the third z.
class SliceSpec {
public:
    SliceSpec(Unit x_unit, Unit y_unit, Unit z_unit);
    /// Parses "u1,u2,u3", e.g. "1,j1,j2". Throws std::invalid_argument.
    static SliceSpec parse(std::string_view text);

    const std::array<Unit, 3>& units() const { return units_; }
    std::string to_string() const;
    friend bool operator==(const SliceSpec&, const SliceSpec&) = default;

private:
    std::array<Unit, 3> units_;
};

Tricomplex embed_slice(const SliceSpec& s, double x, double y, double z);

/// "x0 + x1 i1 + ... + x7 j3" with 9 decimals.
std::string to_string(const Tricomplex& a);

}  // namespace tricomplex
