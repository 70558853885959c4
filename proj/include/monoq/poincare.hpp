#pragma once

#include <cmath>
#include <span>

#include "monoq/errors.hpp"
#include "monoq/quaternion.hpp"
#include "monoq/vec3.hpp"

namespace monoq {

/// Point of the dual of the Poincare Lie algebra in the coordinates
/// (h, p, j, k): energy, momentum, angular momentum, boost vector.
struct CoadjointPoint {
    double h = 0.0;
    Vec3 p{};
    Vec3 j{};
    Vec3 k{};
};

/// One-parameter group factor. Axes are normalized on construction; the
/// boost rapidity and rotation angle may be any real (negative rapidity is
/// the boost along the opposite axis, which inverse words rely on).
struct GroupFactor {
    enum class Kind { time_translation, space_translation, rotation, boost };

    Kind kind = Kind::time_translation;
    double scalar = 0.0;  ///< a0, alpha or zeta
    Vec3 vec{};           ///< translation vector or unit axis

    static GroupFactor time_translation(double a0) {
        return {Kind::time_translation, a0, {}};
    }
    static GroupFactor space_translation(const Vec3& a) {
        return {Kind::space_translation, 0.0, a};
    }
    static GroupFactor rotation(double alpha, const Vec3& axis) {
        return {Kind::rotation, alpha, ImaginaryUnit(axis).axis};
    }
    static GroupFactor boost(double zeta, const Vec3& axis) {
        return {Kind::boost, zeta, ImaginaryUnit(axis).axis};
    }
};

/// Coadjoint action of a single group factor on (h, p, j, k).
inline CoadjointPoint coad_apply(const GroupFactor& g, const CoadjointPoint& y) {
    switch (g.kind) {
        case GroupFactor::Kind::time_translation: {
            const double a0 = g.scalar;
            return {y.h, y.p, y.j, y.k - a0 * y.p};
        }
        case GroupFactor::Kind::space_translation: {
            const Vec3& a = g.vec;
            return {y.h, y.p, y.j + cross(a, y.p), y.k + y.h * a};
        }
        case GroupFactor::Kind::rotation: {
            const UnitQuaternion s(exp_pure(ImaginaryUnit(g.vec), 0.5 * g.scalar));
            return {y.h, rotate_vector(s, y.p), rotate_vector(s, y.j), rotate_vector(s, y.k)};
        }
        case GroupFactor::Kind::boost: {
            const Vec3& n = g.vec;
            const double ch = std::cosh(g.scalar);
            const double sh = std::sinh(g.scalar);
            return {ch * y.h - sh * dot(n, y.p),
                    y.p - sh * y.h * n + (ch - 1.0) * dot(n, y.p) * n,
                    ch * y.j + sh * cross(n, y.k) - (ch - 1.0) * dot(n, y.j) * n,
                    ch * y.k - sh * cross(n, y.j) - (ch - 1.0) * dot(n, y.k) * n};
        }
    }
    return y;
}

/// Left-to-right application of a word of group factors.
inline CoadjointPoint coad_word(std::span<const GroupFactor> word, const CoadjointPoint& y) {
    CoadjointPoint out = y;
    for (const GroupFactor& g : word) out = coad_apply(g, out);
    return out;
}

/// Spin four-vector (w0, w) = (j.p, p x k + h j).
struct PauliLubanski {
    double w0 = 0.0;
    Vec3 w{};
};

inline PauliLubanski pauli_lubanski(const CoadjointPoint& y) {
    return {dot(y.j, y.p), cross(y.p, y.k) + y.h * y.j};
}

/// Invariants c1 = -h^2 + p.p and c2 = -(j.p)^2 + |p x k + h j|^2
/// (mostly-plus metric).
struct Casimirs {
    double c1 = 0.0;
    double c2 = 0.0;
};

inline Casimirs casimirs(const CoadjointPoint& y) {
    const PauliLubanski wv = pauli_lubanski(y);
    return {-y.h * y.h + norm_sq(y.p), -wv.w0 * wv.w0 + norm_sq(wv.w)};
}

/// Global chart (q, p, lambda) of the massless orbit with helicity lambda:
/// h = |p|, j = lambda p/|p| + q x p, k = |p| q.
struct OrbitChartPoint {
    Vec3 q{};
    Vec3 p{};
    double lambda = 0.0;
};

inline CoadjointPoint chart_to_point(const OrbitChartPoint& c, double p_min = 1e-6) {
    const double pn = norm(c.p);
    if (pn <= p_min) throw MomentumTooSmall("chart_to_point: |p| <= p_min");
    return {pn, c.p, (c.lambda / pn) * c.p + cross(c.q, c.p), pn * c.q};
}

/// Inverse chart map q = k/h, lambda = j.p/|p|. Requires h and |p| above
/// p_min and the point to satisfy the orbit constraints: c1 vanishes and the
/// spin four-vector is aligned with (h, p), both scale-relative to 1e-9.
inline OrbitChartPoint point_to_chart(const CoadjointPoint& y, double p_min = 1e-6) {
    const double pn = norm(y.p);
    if (y.h <= p_min || pn <= p_min) throw MomentumTooSmall("point_to_chart: momentum too small");
    const double scale = y.h * y.h + norm_sq(y.p);
    const Casimirs c = casimirs(y);
    if (std::abs(c.c1) > 1e-9 * scale) throw OffOrbit("point_to_chart: c1 != 0");
    const double lambda = dot(y.j, y.p) / pn;
    const PauliLubanski wv = pauli_lubanski(y);
    const double wscale = std::max({1.0, std::abs(wv.w0), norm(wv.w), std::abs(lambda) * pn});
    if (std::abs(wv.w0 - lambda * y.h) > 1e-9 * wscale ||
        norm(wv.w - lambda * y.p) > 1e-9 * wscale)
        throw OffOrbit("point_to_chart: spin vector not aligned with momentum");
    return {y.k / y.h, y.p, lambda};
}

}  // namespace monoq
