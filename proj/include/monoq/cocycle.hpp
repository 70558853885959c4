#pragma once

#include <cmath>

#include "monoq/errors.hpp"
#include "monoq/probe.hpp"
#include "monoq/quaternion.hpp"

namespace monoq {

/// Geometric guards shared by the transport operations.
struct KinematicsParams {
    double r_min = 0.1;      ///< exclusion radius around the field singularity
    double eps_cone = 1e-3;  ///< rejection margin around antipodal/parallel configurations
};

/// Transport cocycle for the translation from x to x + a:
///
///   w(a; x) = cos(alpha/2) + j(x cross a) sin(alpha/2),
///
/// alpha the angle between x and x + a. Unit quaternion; rotates the
/// direction of x onto the direction of x + a along the great circle.
/// Returns exactly 1 when x and x + a are aligned.
inline Quaternion cocycle_w(const Vec3& a, const Vec3& x, const KinematicsParams& p = {}) {
    const Vec3 xa = x + a;
    if (norm(x) <= p.r_min || norm(xa) <= p.r_min)
        throw SingularPoint("cocycle_w: base or endpoint inside exclusion radius");
    const Vec3 c = cross(x, xa);
    const double cn = norm(c);
    const double d = dot(x, xa);
    if (cn == 0.0) {
        if (d > 0.0) return Quaternion::identity();
        throw AntipodalTranslation("cocycle_w: x and x+a anti-parallel");
    }
    if (d < 0.0 && cn < p.eps_cone * norm(x) * norm(xa))
        throw AntipodalTranslation("cocycle_w: x and x+a anti-parallel within eps_cone");
    const double alpha = std::atan2(cn, d);
    return {std::cos(0.5 * alpha), (c / cn) * std::sin(0.5 * alpha)};
}

/// Twisted translation [U(a) psi](x) = w(a; x-a) psi(x-a).
inline Quaternion apply_u(const Vec3& a, const ProbeFunction& psi, const Vec3& x,
                          const KinematicsParams& p = {}) {
    return cocycle_w(a, x - a, p) * psi.value(x - a);
}

/// Multiplier of the projective composition U(a) U(b) = U(a+b) M(a,b):
///
///   m(a, b; x) = w*(a+b; x) w(a; x+b) w(b; x).
///
/// Unit quaternion fixing the direction of x; equals 1 when b = -a and
/// when x, a, b span a plane through the origin.
inline Quaternion multiplier_m(const Vec3& a, const Vec3& b, const Vec3& x,
                               const KinematicsParams& p = {}) {
    return conj(cocycle_w(a + b, x, p)) * cocycle_w(a, x + b, p) * cocycle_w(b, x, p);
}

/// Oriented solid angle of the geodesic triangle spanned by the directions
/// of v1, v2, v3 (two-argument arctangent form). Antisymmetric under vertex
/// swaps; |result| < 2 pi. Identical inputs give 0; otherwise near-parallel
/// vertex pairs throw DegenerateTriangle.
inline double solid_angle(const Vec3& v1, const Vec3& v2, const Vec3& v3, double eps_cone = 1e-3) {
    auto same = [](const Vec3& u, const Vec3& v) { return u.x == v.x && u.y == v.y && u.z == v.z; };
    if (same(v1, v2) || same(v2, v3) || same(v1, v3)) return 0.0;
    const Vec3 r1 = normalized(v1), r2 = normalized(v2), r3 = normalized(v3);
    if (norm(cross(r1, r2)) < eps_cone || norm(cross(r2, r3)) < eps_cone ||
        norm(cross(r1, r3)) < eps_cone)
        throw DegenerateTriangle("solid_angle: two vertices (anti-)parallel within eps_cone");
    const double num = dot(r1, cross(r2, r3));
    const double den = 1.0 + dot(r1, r2) + dot(r2, r3) + dot(r1, r3);
    return 2.0 * std::atan2(num, den);
}

/// Signed rotation angle of a unit quaternion u about the axis of j:
/// projection of the principal log onto the axis.
inline double phase_angle_about(const Quaternion& u, const ImaginaryUnit& axis) {
    return dot(log_unit(u), axis.axis);
}

/// Ratio of the multiplier phase to the solid angle of the transport
/// triangle (x, x+b, x+a+b); the middle vertex is the intermediate stop of
/// the b-then-a translation path that m(a, b; x) transports along. The
/// ratio is the monopole strength, constant over admissible configurations.
/// Throws IllConditioned when |solid angle| <= 1e-6.
inline double geometric_phase_ratio(const Vec3& a, const Vec3& b, const Vec3& x,
                                    const KinematicsParams& p = {}) {
    const Quaternion m = multiplier_m(a, b, x, p);
    const double omega = solid_angle(x, x + b, x + a + b, p.eps_cone);
    if (std::abs(omega) <= 1e-6)
        throw IllConditioned("geometric_phase_ratio: solid angle below 1e-6");
    return phase_angle_about(m, jdir(x, p.r_min)) / omega;
}

}  // namespace monoq
