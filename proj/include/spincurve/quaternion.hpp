#pragma once

#include <cmath>

#include "spincurve/errors.hpp"
#include "spincurve/tolerances.hpp"

namespace spincurve {

// General element of the quaternion algebra H, coefficients of (1, i, j, k).
struct Quaternion {
    double a = 0, b = 0, c = 0, d = 0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double a_, double b_, double c_, double d_)
        : a(a_), b(b_), c(c_), d(d_) {}

    constexpr Quaternion operator+(const Quaternion& q) const {
        return {a + q.a, b + q.b, c + q.c, d + q.d};
    }
    constexpr Quaternion operator-(const Quaternion& q) const {
        return {a - q.a, b - q.b, c - q.c, d - q.d};
    }
    constexpr Quaternion operator-() const { return {-a, -b, -c, -d}; }
    constexpr Quaternion operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
    constexpr Quaternion conj() const { return {a, -b, -c, -d}; }
    double norm() const { return std::sqrt(a * a + b * b + c * c + d * d); }
    constexpr double norm2() const { return a * a + b * b + c * c + d * d; }
};

constexpr Quaternion quat_mul(const Quaternion& p, const Quaternion& q) {
    return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
            p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
            p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
            p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

// Purely imaginary quaternion b i + c j + d k; the real part is zero by type.
struct ImaginaryQuaternion {
    double b = 0, c = 0, d = 0;

    constexpr ImaginaryQuaternion() = default;
    constexpr ImaginaryQuaternion(double b_, double c_, double d_) : b(b_), c(c_), d(d_) {}

    constexpr Quaternion full() const { return {0, b, c, d}; }
    double norm() const { return std::sqrt(b * b + c * c + d * d); }
};

// Unit-norm quaternion; checked at construction, renormalizable on demand.
struct UnitQuaternion {
    double a = 1, b = 0, c = 0, d = 0;

    constexpr UnitQuaternion() = default;

    explicit UnitQuaternion(const Quaternion& q, double tolerance = tol().construction)
        : a(q.a), b(q.b), c(q.c), d(q.d) {
        if (std::abs(q.norm() - 1.0) > tolerance)
            throw PreconditionError("UnitQuaternion: norm deviates from 1 beyond tolerance");
    }

    static UnitQuaternion normalized(const Quaternion& q) {
        double n = q.norm();
        if (n == 0.0) throw PreconditionError("UnitQuaternion: cannot normalize zero quaternion");
        return UnitQuaternion(q * (1.0 / n), 1e-6);
    }

    constexpr Quaternion full() const { return {a, b, c, d}; }
    constexpr UnitQuaternion operator-() const {
        UnitQuaternion r;
        r.a = -a; r.b = -b; r.c = -c; r.d = -d;
        return r;
    }
    double dist(const UnitQuaternion& o) const {
        double da = a - o.a, db = b - o.b, dc = c - o.c, dd = d - o.d;
        return std::sqrt(da * da + db * db + dc * dc + dd * dd);
    }
};

inline UnitQuaternion unit_mul(const UnitQuaternion& p, const UnitQuaternion& q) {
    return UnitQuaternion::normalized(quat_mul(p.full(), q.full()));
}

// Element of Spin4 identified with S^3 x S^3.
struct Spin4Element {
    UnitQuaternion zl, zr;

    Spin4Element() = default;
    Spin4Element(const UnitQuaternion& l, const UnitQuaternion& r) : zl(l), zr(r) {}

    Spin4Element operator-() const { return {-zl, -zr}; }
    double dist(const Spin4Element& o) const {
        double dl = zl.dist(o.zl), dr = zr.dist(o.zr);
        return std::sqrt(dl * dl + dr * dr);
    }
};

// exp(t h) for an imaginary quaternion h, computed with the sinc-safe
// Taylor branch below |t h| ~ 1e-8.
inline UnitQuaternion exp_im(const ImaginaryQuaternion& h, double t = 1.0) {
    double hn = h.norm();
    double th = t * hn;
    double cos_th = std::cos(th);
    double s;  // sin(th)/hn * 1, i.e. t * sinc(th)
    if (std::abs(th) < 1e-8) {
        s = t * (1.0 - th * th / 6.0);
    } else {
        s = std::sin(th) / hn;
    }
    Quaternion q{cos_th, s * h.b, s * h.c, s * h.d};
    return UnitQuaternion::normalized(q);
}

inline constexpr Quaternion kQuatOne{1, 0, 0, 0};
inline constexpr Quaternion kQuatI{0, 1, 0, 0};
inline constexpr Quaternion kQuatJ{0, 0, 1, 0};
inline constexpr Quaternion kQuatK{0, 0, 0, 1};

}  // namespace spincurve
