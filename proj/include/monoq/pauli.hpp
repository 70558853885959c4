#pragma once

#include <array>
#include <complex>

#include "monoq/quaternion.hpp"

namespace monoq {

using Mat2c = std::array<std::array<std::complex<double>, 2>, 2>;

/// Complex 2x2 image of a quaternion under e0 -> sigma0, ek -> -i sigma_k.
inline Mat2c pauli_matrix(const Quaternion& q) {
    const std::complex<double> i(0.0, 1.0);
    Mat2c m;
    m[0][0] = q.w - i * q.v.z;
    m[0][1] = -i * q.v.x - q.v.y;
    m[1][0] = -i * q.v.x + q.v.y;
    m[1][1] = q.w + i * q.v.z;
    return m;
}

inline Mat2c matmul(const Mat2c& a, const Mat2c& b) {
    Mat2c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

/// Representation defect: max entrywise |matrix(q1 q2) - matrix(q1) matrix(q2)|.
/// Zero (to rounding) iff the dictionary is a homomorphism.
inline double pauli_check(const Quaternion& q1, const Quaternion& q2) {
    const Mat2c lhs = pauli_matrix(q1 * q2);
    const Mat2c rhs = matmul(pauli_matrix(q1), pauli_matrix(q2));
    double dev = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) dev = std::max(dev, std::abs(lhs[i][j] - rhs[i][j]));
    return dev;
}

}  // namespace monoq
