#pragma once

#include <array>
#include <limits>
#include <stdexcept>

#include "monoq/quaternion.hpp"

namespace monoq {

/// Quaternion-valued Gaussian-enveloped affine test function
///
///   psi(x) = exp(-|x - c|^2 / s^2) (q0 + sum_i (x_i - c_i) q_i)
///
/// with closed-form partial derivatives. width may be +infinity, which
/// gives a constant-envelope (pure affine) function.
struct ProbeFunction {
    Vec3 center{};
    double width = 1.0;
    Quaternion q0 = Quaternion::identity();
    std::array<Quaternion, 3> q1{};

    ProbeFunction() = default;
    ProbeFunction(const Vec3& center_, double width_, const Quaternion& q0_,
                  const std::array<Quaternion, 3>& q1_)
        : center(center_), width(width_), q0(q0_), q1(q1_) {
        if (!(width > 0.0)) throw std::invalid_argument("ProbeFunction: width must be positive");
    }

    static ProbeFunction constant(const Quaternion& amplitude) {
        return ProbeFunction({}, std::numeric_limits<double>::infinity(), amplitude, {});
    }

    Quaternion value(const Vec3& x) const {
        const Vec3 d = x - center;
        Quaternion affine = q0;
        for (int i = 0; i < 3; ++i) affine += d[i] * q1[i];
        return std::exp(-norm_sq(d) / (width * width)) * affine;
    }

    /// Analytic partial derivative along axis i.
    Quaternion partial(int i, const Vec3& x) const {
        const Vec3 d = x - center;
        Quaternion affine = q0;
        for (int k = 0; k < 3; ++k) affine += d[k] * q1[k];
        const double env = std::exp(-norm_sq(d) / (width * width));
        return env * (q1[i] - (2.0 * d[i] / (width * width)) * affine);
    }

    std::array<Quaternion, 3> gradient(const Vec3& x) const {
        return {partial(0, x), partial(1, x), partial(2, x)};
    }
};

}  // namespace monoq
