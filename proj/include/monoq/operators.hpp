#pragma once

#include <cmath>

#include "monoq/cocycle.hpp"
#include "monoq/probe.hpp"
#include "monoq/quaternion.hpp"

namespace monoq {

constexpr Quaternion commutator(const Quaternion& a, const Quaternion& b) {
    return a * b - b * a;
}

/// Gauge term of the covariant derivative along u:
///   A_u(x) = (1/2) (u cross x).e / |x|^2   (pure quaternion).
inline Quaternion connection_a(const Vec3& u, const Vec3& x, double r_min = 0.1) {
    const double r2 = norm_sq(x);
    if (r2 <= r_min * r_min) throw SingularPoint("connection_a: |x| <= r_min");
    return Quaternion::pure(cross(u, x) * (0.5 / r2));
}

/// Analytic partial derivative d/dx_i of the gauge term A_j(x).
inline Quaternion connection_partial(int i, int j, const Vec3& x, double r_min = 0.1) {
    const double r2 = norm_sq(x);
    if (r2 <= r_min * r_min) throw SingularPoint("connection_partial: |x| <= r_min");
    const Vec3 ej = basis3(j);
    return Quaternion::pure(cross(ej, basis3(i)) * (0.5 / r2) -
                            cross(ej, x) * (x[i] / (r2 * r2)));
}

/// Covariant derivative (nabla_u psi)(x) = u.grad psi(x) + A_u(x) psi(x).
inline Quaternion apply_nabla(const Vec3& u, const ProbeFunction& psi, const Vec3& x,
                              double r_min = 0.1) {
    Quaternion d{};
    for (int i = 0; i < 3; ++i) d += u[i] * psi.partial(i, x);
    return d + connection_a(u, x, r_min) * psi.value(x);
}

/// Complex-structure action (J psi)(x) = j(x) psi(x); left multiplication.
inline Quaternion apply_j(const Quaternion& value, const Vec3& x, double r_min = 0.1) {
    return jdir(x, r_min).q() * value;
}

/// Position component operator (X_i psi)(x) = x_i psi(x).
inline Quaternion apply_x(int i, const Quaternion& value, const Vec3& x) {
    return x[i] * value;
}

/// Momentum operator P_i = J nabla_i.
inline Quaternion apply_p(int i, const ProbeFunction& psi, const Vec3& x, double r_min = 0.1) {
    return apply_j(apply_nabla(basis3(i), psi, x, r_min), x, r_min);
}

/// Rotation generator (L_i psi)(x) = eps_ijk x_j d_k psi(x) - (1/2) e_i psi(x);
/// the spin term acts by left multiplication.
inline Quaternion apply_l(int i, const ProbeFunction& psi, const Vec3& x) {
    Quaternion orbital{};
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            const double eps = levi_civita(i, j, k);
            if (eps != 0.0) orbital += eps * x[j] * psi.partial(k, x);
        }
    return orbital - 0.5 * (Quaternion::pure(basis3(i)) * psi.value(x));
}

/// Curvature of the covariant derivative as a multiplication operator:
///   Omega_ij = d_i A_j - d_j A_i + [A_i, A_j]   (pure quaternion).
inline Quaternion curvature_op(int i, int j, const Vec3& x, double r_min = 0.1) {
    const Quaternion ai = connection_a(basis3(i), x, r_min);
    const Quaternion aj = connection_a(basis3(j), x, r_min);
    return connection_partial(i, j, x, r_min) - connection_partial(j, i, x, r_min) +
           commutator(ai, aj);
}

/// Deviation of Omega_ij psi(x) from the monopole field form
///   -(1/2) eps_ijk (x^k / |x|^3) j(x) psi(x).
inline double curvature_check(int i, int j, const Vec3& x, const ProbeFunction& psi,
                              double r_min = 0.1) {
    const Quaternion applied = curvature_op(i, j, x, r_min) * psi.value(x);
    const double r = norm(x);
    double strength = 0.0;
    for (int k = 0; k < 3; ++k) strength += levi_civita(i, j, k) * x[k];
    const Quaternion target = (-0.5 * strength / (r * r * r)) * apply_j(psi.value(x), x, r_min);
    return norm(applied - target);
}

/// Components of the curvature two-form on the e1, e2, e3 axes at x.
inline Vec3 presymplectic_extract(int i, int j, const Vec3& x, double r_min = 0.1) {
    return curvature_op(i, j, x, r_min).v;
}

}  // namespace monoq
