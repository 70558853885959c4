#pragma once

#include "monoq/vec3.hpp"

namespace monoq {

/// Second-order central difference d/dt f(t) at t = 0.
template <typename F>
auto fd_central(F&& f, double h) {
    return (f(h) - f(-h)) * (1.0 / (2.0 * h));
}

/// Fourth-order central difference d/dt f(t) at t = 0 (five-point stencil).
template <typename F>
auto fd_central4(F&& f, double h) {
    return (f(-2.0 * h) - f(2.0 * h) + 8.0 * (f(h) - f(-h))) * (1.0 / (12.0 * h));
}

/// Second-order central partial derivative along axis i of a field on R^3.
template <typename F>
auto fd_partial(F&& f, const Vec3& x, int i, double h) {
    const Vec3 e = basis3(i);
    return fd_central([&](double t) { return f(x + t * e); }, h);
}

/// Fourth-order central partial derivative along axis i of a field on R^3.
template <typename F>
auto fd_partial4(F&& f, const Vec3& x, int i, double h) {
    const Vec3 e = basis3(i);
    return fd_central4([&](double t) { return f(x + t * e); }, h);
}

}  // namespace monoq
