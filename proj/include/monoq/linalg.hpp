#pragma once

#include <array>
#include <cstddef>
#include <cmath>

#include "monoq/errors.hpp"

namespace monoq {

template <std::size_t N>
using MatN = std::array<std::array<double, N>, N>;

/// Gauss-Jordan inverse with partial pivoting.
template <std::size_t N>
MatN<N> mat_inverse(MatN<N> m) {
    MatN<N> inv{};
    for (std::size_t i = 0; i < N; ++i) inv[i][i] = 1.0;
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < N; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        if (std::abs(m[pivot][col]) < 1e-12) throw IllConditioned("mat_inverse: tiny pivot");
        std::swap(m[col], m[pivot]);
        std::swap(inv[col], inv[pivot]);
        const double d = 1.0 / m[col][col];
        for (std::size_t c = 0; c < N; ++c) {
            m[col][c] *= d;
            inv[col][c] *= d;
        }
        for (std::size_t r = 0; r < N; ++r) {
            if (r == col) continue;
            const double f = m[r][col];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < N; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

/// Determinant by LU with partial pivoting.
template <std::size_t N>
double mat_determinant(MatN<N> m) {
    double det = 1.0;
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < N; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        if (m[pivot][col] == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(m[col], m[pivot]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < N; ++r) {
            const double f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < N; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

}  // namespace monoq
