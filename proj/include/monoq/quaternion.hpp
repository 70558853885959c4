#pragma once

#include <cmath>

#include "monoq/errors.hpp"
#include "monoq/vec3.hpp"

namespace monoq {

/// Quaternion w + v1*e1 + v2*e2 + v3*e3 with Hamilton units
/// e1*e2 = e3, e2*e3 = e1, e3*e1 = e2, ei*ei = -1.
struct Quaternion {
    double w = 0.0;
    Vec3 v{};

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, const Vec3& v_) : w(w_), v(v_) {}
    constexpr Quaternion(double w_, double v1, double v2, double v3) : w(w_), v{v1, v2, v3} {}

    static constexpr Quaternion identity() { return {1.0, {}}; }
    static constexpr Quaternion pure(const Vec3& v) { return {0.0, v}; }

    constexpr Quaternion operator+(const Quaternion& o) const { return {w + o.w, v + o.v}; }
    constexpr Quaternion operator-(const Quaternion& o) const { return {w - o.w, v - o.v}; }
    constexpr Quaternion operator-() const { return {-w, -v}; }
    constexpr Quaternion operator*(double s) const { return {w * s, v * s}; }
    constexpr Quaternion& operator+=(const Quaternion& o) { w += o.w; v += o.v; return *this; }
    constexpr Quaternion& operator-=(const Quaternion& o) { w -= o.w; v -= o.v; return *this; }
};

constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

/// Hamilton product (non-commutative).
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - dot(a.v, b.v), a.w * b.v + b.w * a.v + cross(a.v, b.v)};
}

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.v}; }

constexpr double norm_sq(const Quaternion& q) { return q.w * q.w + norm_sq(q.v); }

inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

/// Multiplicative inverse; conj(q)/|q|^2.
inline Quaternion inverse(const Quaternion& q) {
    const double n2 = norm_sq(q);
    if (n2 == 0.0) throw IllConditioned("quaternion inverse of zero");
    return conj(q) * (1.0 / n2);
}

/// Pure imaginary unit quaternion n.e with |n| = 1; squares to -1.
struct ImaginaryUnit {
    Vec3 axis{0.0, 0.0, 1.0};

    ImaginaryUnit() = default;
    explicit ImaginaryUnit(const Vec3& raw) {
        const double n = norm(raw);
        if (n < 1e-8) throw IllConditioned("imaginary unit axis too short");
        axis = raw / n;
    }

    constexpr Quaternion q() const { return Quaternion::pure(axis); }
};

/// Unit quaternion; renormalizes on construction.
struct UnitQuaternion {
    Quaternion q = Quaternion::identity();

    UnitQuaternion() = default;
    explicit UnitQuaternion(const Quaternion& raw) {
        const double n = norm(raw);
        if (n < 1e-8) throw IllConditioned("unit quaternion from near-zero input");
        q = raw * (1.0 / n);
    }
};

/// exp(u * theta) = cos(theta) + u sin(theta) for an imaginary unit u.
inline Quaternion exp_pure(const ImaginaryUnit& u, double theta) {
    return {std::cos(theta), u.axis * std::sin(theta)};
}

/// exp of a pure quaternion given as its vector part.
inline Quaternion exp_pure(const Vec3& p) {
    const double theta = norm(p);
    if (theta == 0.0) return Quaternion::identity();
    return {std::cos(theta), p * (std::sin(theta) / theta)};
}

/// Principal log of a unit quaternion, returned as the vector part
/// (axis times angle, angle in [0, pi]).
inline Vec3 log_unit(const Quaternion& u) {
    const double s = norm(u.v);
    if (s == 0.0) return {};
    const double theta = std::atan2(s, u.w);
    return u.v * (theta / s);
}

/// Direction imaginary unit j(x) = (x/|x|).e of a field point.
/// Throws SingularPoint inside the exclusion radius.
inline ImaginaryUnit jdir(const Vec3& x, double r_min = 0.1) {
    const double r = norm(x);
    if (r <= r_min) throw SingularPoint("jdir: |x| <= r_min");
    return ImaginaryUnit(x);
}

/// Rotation of v by the unit quaternion s: vector part of s (v.e) s*.
/// exp_pure(e3, alpha/2) rotates e1 to (cos alpha, sin alpha, 0).
inline Vec3 rotate_vector(const UnitQuaternion& s, const Vec3& v) {
    return (s.q * Quaternion::pure(v) * conj(s.q)).v;
}

/// Bundle projection s -> vector part of s* e3 s; lands on the unit sphere
/// and is invariant under left multiplication of s by exp(e3 t).
inline Vec3 hopf_project(const UnitQuaternion& s) {
    return (conj(s.q) * Quaternion(0.0, 0.0, 0.0, 1.0) * s.q).v;
}

}  // namespace monoq
