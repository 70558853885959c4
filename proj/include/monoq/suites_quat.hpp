#pragma once

#include <algorithm>
#include <cmath>

#include "monoq/pauli.hpp"
#include "monoq/quaternion.hpp"
#include "monoq/suites_common.hpp"

namespace monoq {

/// Quaternion algebra checks: ring axioms against closed forms, the Pauli
/// matrix representation, the rotation action and the bundle projection.
inline void run_quat_suite(CheckHarness& h) {
    const std::string S = "quat";
    const double te = h.config().tol_exact;
    using R = std::optional<double>;

    h.sampled(S, "quat.conj_norm_product", te, "", [](CounterRng& rng) -> R {
        const Quaternion a = random_quaternion(rng);
        const Quaternion b = random_quaternion(rng);
        const double d1 = norm(conj(a) * a - Quaternion(norm_sq(a), {}));
        const double d2 = std::abs(norm(a * b) - norm(a) * norm(b));
        const double d3 = norm(conj(a * b) - conj(b) * conj(a));
        return std::max({d1, d2, d3});
    });

    h.sampled(S, "quat.mul_associativity", te, "", [](CounterRng& rng) -> R {
        const Quaternion a = random_quaternion(rng);
        const Quaternion b = random_quaternion(rng);
        const Quaternion c = random_quaternion(rng);
        return norm((a * b) * c - a * (b * c));
    });

    h.sampled(S, "quat.exp_group_law", te, "", [](CounterRng& rng) -> R {
        const ImaginaryUnit u(rng.unit_vector());
        const double t1 = 3.0 * rng.symmetric();
        const double t2 = 3.0 * rng.symmetric();
        const double d1 = norm(exp_pure(u, t1) * exp_pure(u, t2) - exp_pure(u, t1 + t2));
        const double d2 = norm(exp_pure(u, 0.0) - Quaternion::identity());
        return std::max(d1, d2);
    });

    h.sampled(S, "quat.axis_noncommutativity", te, "", [](CounterRng& rng) -> R {
        const double theta = 0.01 + (3.1215926) * rng.uniform();
        const Quaternion a = exp_pure(ImaginaryUnit({1, 0, 0}), theta);
        const Quaternion b = exp_pure(ImaginaryUnit({0, 1, 0}), theta);
        return norm(a * b - b * a) > 1e-9 ? 0.0 : 1.0;
    });

    h.sampled(S, "quat.exp_log_roundtrip", te, "", [](CounterRng& rng) -> R {
        const Vec3 u = rng.unit_vector();
        const double theta = 0.01 + 3.12 * rng.uniform();
        return norm(log_unit(exp_pure(u * theta)) - u * theta);
    });

    h.sampled(S, "quat.pauli_homomorphism", te, "", [](CounterRng& rng) -> R {
        return pauli_check(random_quaternion(rng), random_quaternion(rng));
    });

    h.sampled(S, "quat.pauli_unitary", te, "", [](CounterRng& rng) -> R {
        const UnitQuaternion s = random_unit_quaternion(rng);
        const Mat2c prod = matmul(pauli_matrix(s.q), pauli_matrix(conj(s.q)));
        double dev = 0.0;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                dev = std::max(dev, std::abs(prod[r][c] - (r == c ? 1.0 : 0.0)));
        return dev;
    });

    h.sampled(S, "quat.rotation_isometry", te, "", [](CounterRng& rng) -> R {
        const UnitQuaternion s = random_unit_quaternion(rng);
        const Vec3 v = rng.in_box(2.0);
        const Vec3 w = rng.in_box(2.0);
        const Vec3 rv = rotate_vector(s, v);
        const Vec3 rw = rotate_vector(s, w);
        const double d1 = std::abs(dot(rv, rw) - dot(v, w));
        const double d2 = norm(rotate_vector(s, cross(v, w)) - cross(rv, rw));
        const double d3 = std::abs(norm(rv) - norm(v));
        return std::max({d1, d2, d3});
    });

    h.sampled(S, "quat.rotation_orientation", te,
              "conjugation side fixed so exp(e3 alpha/2) turns e1 by +alpha about +z",
              [](CounterRng& rng) -> R {
                  const double alpha = 3.0 * rng.symmetric();
                  const UnitQuaternion s(exp_pure(ImaginaryUnit({0, 0, 1}), 0.5 * alpha));
                  return norm(rotate_vector(s, {1, 0, 0}) -
                              Vec3{std::cos(alpha), std::sin(alpha), 0.0});
              });

    h.sampled(S, "quat.hopf_fiber_invariance", te, "", [](CounterRng& rng) -> R {
        const UnitQuaternion s = random_unit_quaternion(rng);
        const double t = 3.0 * rng.symmetric();
        const UnitQuaternion moved(exp_pure(ImaginaryUnit({0, 0, 1}), t) * s.q);
        const Vec3 base = hopf_project(s);
        const double d1 = norm(hopf_project(moved) - base);
        const double d2 = std::abs(norm(base) - 1.0);
        return std::max(d1, d2);
    });

    h.sampled(S, "quat.hopf_rotation_consistency", te,
              "projection equals the inverse-side rotation of e3; pins both side conventions",
              [](CounterRng& rng) -> R {
                  const UnitQuaternion s = random_unit_quaternion(rng);
                  const UnitQuaternion si(conj(s.q));
                  return norm(hopf_project(s) - rotate_vector(si, {0, 0, 1}));
              });
}

}  // namespace monoq
