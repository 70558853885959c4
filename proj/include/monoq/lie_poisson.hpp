#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "monoq/errors.hpp"
#include "monoq/linalg.hpp"
#include "monoq/poincare.hpp"

namespace monoq {

inline constexpr int kCoadDim = 10;
using Coord10 = std::array<double, kCoadDim>;

/// Flat coordinates (h, p1..p3, j1..j3, k1..k3) of a coadjoint point.
inline Coord10 to_coords(const CoadjointPoint& y) {
    return {y.h, y.p.x, y.p.y, y.p.z, y.j.x, y.j.y, y.j.z, y.k.x, y.k.y, y.k.z};
}

inline CoadjointPoint from_coords(const Coord10& c) {
    return {c[0], {c[1], c[2], c[3]}, {c[4], c[5], c[6]}, {c[7], c[8], c[9]}};
}

/// One-parameter subgroup exp(t X_i) for the generator basis
/// X_0 = H, X_1..3 = P, X_4..6 = J, X_7..9 = K. The time-translation factor
/// is parameterized by a0 with generator -a0 H, hence a0 = -t.
inline GroupFactor basis_flow(int i, double t) {
    if (i == 0) return GroupFactor::time_translation(-t);
    if (i <= 3) return GroupFactor::space_translation(t * basis3(i - 1));
    if (i <= 6) return GroupFactor::rotation(t, basis3(i - 4));
    return GroupFactor::boost(t, basis3(i - 7));
}

/// Structure constants c^k_ij of the bracket {x_i, x_j} = c^k_ij x_k,
/// derived numerically from the group action and rounded to the exact
/// half-integer grid. fd_residual records the worst rounding distance.
struct StructureConstants {
    std::array<std::array<Coord10, kCoadDim>, kCoadDim> c{};
    double fd_residual = 0.0;
};

/// Raw finite-difference linearization of the coadjoint flow of X_i at the
/// identity, sampled on coordinate basis points (the action is linear in y).
/// raw[i][j][k] is the y_k-coefficient of the j-th component of the flow
/// derivative.
inline std::array<std::array<Coord10, kCoadDim>, kCoadDim> coad_flow_derivative(double step) {
    std::array<std::array<Coord10, kCoadDim>, kCoadDim> raw{};
    for (int i = 0; i < kCoadDim; ++i)
        for (int k = 0; k < kCoadDim; ++k) {
            Coord10 e{};
            e[k] = 1.0;
            const CoadjointPoint y = from_coords(e);
            const Coord10 plus = to_coords(coad_apply(basis_flow(i, step), y));
            const Coord10 minus = to_coords(coad_apply(basis_flow(i, -step), y));
            for (int j = 0; j < kCoadDim; ++j)
                raw[i][j][k] = (plus[j] - minus[j]) / (2.0 * step);
        }
    return raw;
}

inline StructureConstants derive_structure_constants(double step = 1e-5) {
    const auto raw = coad_flow_derivative(step);
    StructureConstants sc;
    for (int i = 0; i < kCoadDim; ++i)
        for (int j = 0; j < kCoadDim; ++j)
            for (int k = 0; k < kCoadDim; ++k) {
                // Bracket orientation: the sign is chosen so the rotation
                // sector closes as {j1, j2} = +j3 (and {p_i, k_j} = -h d_ij).
                const double value = -raw[i][j][k];
                const double rounded = std::round(2.0 * value) / 2.0;
                if (std::abs(rounded - value) > 1e-6)
                    throw InconsistentTable("structure constants: entry off the half-integer grid");
                sc.fd_residual = std::max(sc.fd_residual, std::abs(rounded - value));
                sc.c[i][j][k] = rounded;
            }
    for (int i = 0; i < kCoadDim; ++i)
        for (int j = 0; j < kCoadDim; ++j)
            for (int k = 0; k < kCoadDim; ++k)
                if (sc.c[i][j][k] != -sc.c[j][i][k])
                    throw InconsistentTable("structure constants: antisymmetry broken");
    return sc;
}

inline const StructureConstants& structure_constants() {
    static const StructureConstants sc = derive_structure_constants();
    return sc;
}

/// Worst Jacobi-identity residual of the derived table.
inline double jacobi_residual(const StructureConstants& sc = structure_constants()) {
    double worst = 0.0;
    for (int i = 0; i < kCoadDim; ++i)
        for (int j = 0; j < kCoadDim; ++j)
            for (int k = 0; k < kCoadDim; ++k)
                for (int l = 0; l < kCoadDim; ++l) {
                    double s = 0.0;
                    for (int m = 0; m < kCoadDim; ++m)
                        s += sc.c[i][j][m] * sc.c[m][k][l] + sc.c[j][k][m] * sc.c[m][i][l] +
                             sc.c[k][i][m] * sc.c[m][j][l];
                    worst = std::max(worst, std::abs(s));
                }
    return worst;
}

/// Scalar observable on the dual space with a gradient oracle.
struct ScalarField {
    std::function<double(const Coord10&)> value;
    std::function<Coord10(const Coord10&)> gradient;
};

/// Coordinate observable x_idx.
inline ScalarField coordinate_field(int idx) {
    return {[idx](const Coord10& y) { return y[idx]; },
            [idx](const Coord10&) {
                Coord10 g{};
                g[idx] = 1.0;
                return g;
            }};
}

/// Chart position observable q_i = k_i / h (defined where h != 0).
inline ScalarField chart_q_field(int i) {
    const int ki = 7 + i;
    return {[ki](const Coord10& y) { return y[ki] / y[0]; },
            [ki](const Coord10& y) {
                Coord10 g{};
                g[0] = -y[ki] / (y[0] * y[0]);
                g[ki] = 1.0 / y[0];
                return g;
            }};
}

/// Observable with central finite-difference gradient (fallback for fields
/// without an analytic gradient).
inline ScalarField fd_field(std::function<double(const Coord10&)> f, double step = 1e-5) {
    return {f, [f, step](const Coord10& y) {
                Coord10 g{};
                for (int i = 0; i < kCoadDim; ++i) {
                    Coord10 plus = y, minus = y;
                    plus[i] += step;
                    minus[i] -= step;
                    g[i] = (f(plus) - f(minus)) / (2.0 * step);
                }
                return g;
            }};
}

/// Lie-Poisson bracket {f, g}(y) = c^k_ij (df/dx_i)(dg/dx_j) y_k.
inline double lie_poisson_bracket(const ScalarField& f, const ScalarField& g, const Coord10& y,
                                  const StructureConstants& sc = structure_constants()) {
    const Coord10 gf = f.gradient(y);
    const Coord10 gg = g.gradient(y);
    double sum = 0.0;
    for (int i = 0; i < kCoadDim; ++i) {
        if (gf[i] == 0.0) continue;
        for (int j = 0; j < kCoadDim; ++j) {
            if (gg[j] == 0.0) continue;
            double contracted = 0.0;
            for (int k = 0; k < kCoadDim; ++k) contracted += sc.c[i][j][k] * y[k];
            sum += gf[i] * gg[j] * contracted;
        }
    }
    return sum;
}

/// Matrix of the orbit symplectic form in the ordered chart basis
/// (dq1..dq3, dp1..dp3), Omega_ab = omega(e_a, e_b):
///
///   Omega = [ 0   I ]         B_ab = lambda eps_abk p^k / |p|^3.
///           [-I   B ],
///
/// The sign of the momentum-momentum block is fixed so that -Omega^(-1)
/// equals the Poisson bivector of the chart coordinates ({q_i, p_j} = +d_ij,
/// {q_i, q_j} = -lambda eps_ijk p^k/|p|^3).
inline MatN<6> symplectic_matrix(const OrbitChartPoint& c, double p_min = 1e-6) {
    const double pn = norm(c.p);
    if (pn <= p_min) throw MomentumTooSmall("symplectic_matrix: |p| <= p_min");
    MatN<6> omega{};
    for (int a = 0; a < 3; ++a) {
        omega[a][3 + a] = 1.0;
        omega[3 + a][a] = -1.0;
    }
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += levi_civita(a, b, k) * c.p[k];
            omega[3 + a][3 + b] = c.lambda * s / (pn * pn * pn);
        }
    return omega;
}

/// Residual of the closed-form chart actions: time translations move q by
/// -a0 p/|p|, space translations by +a, rotations act linearly; p follows
/// the momentum row and lambda is invariant. Only those three factor kinds
/// have closed forms here.
inline double coad_q_action_check(const GroupFactor& g, const OrbitChartPoint& c,
                                  double p_min = 1e-6) {
    if (g.kind == GroupFactor::Kind::boost)
        throw std::invalid_argument("coad_q_action_check: no closed chart form for boosts");
    const OrbitChartPoint out = point_to_chart(coad_apply(g, chart_to_point(c, p_min)), p_min);
    Vec3 q_expect = c.q;
    Vec3 p_expect = c.p;
    switch (g.kind) {
        case GroupFactor::Kind::time_translation:
            q_expect = c.q - (g.scalar / norm(c.p)) * c.p;
            break;
        case GroupFactor::Kind::space_translation:
            q_expect = c.q + g.vec;
            break;
        case GroupFactor::Kind::rotation: {
            const UnitQuaternion s(exp_pure(ImaginaryUnit(g.vec), 0.5 * g.scalar));
            q_expect = rotate_vector(s, c.q);
            p_expect = rotate_vector(s, c.p);
            break;
        }
        default:
            break;
    }
    return std::max({norm(out.q - q_expect), norm(out.p - p_expect),
                     std::abs(out.lambda - c.lambda)});
}

/// Deviation of the chart bracket table at strength lambda = 1/2 from the
/// monopole table with the inverse-cube field:
///   {p_i, p_j} = 0, {p_i, q_j} = -d_ij, {q_i, q_j} = -(1/2) eps_ijk p^k/|p|^3.
/// The identification lambda = 1/2 is applied internally regardless of
/// c.lambda; the inverse-cube normalization is the one consistent with the
/// bracket's Jacobi identity.
inline double monopole_duality_check(const OrbitChartPoint& c, double p_min = 1e-6) {
    const double pn = norm(c.p);
    if (pn <= p_min) throw MomentumTooSmall("monopole_duality_check: |p| <= p_min");
    const OrbitChartPoint half{c.q, c.p, 0.5};
    const Coord10 y = to_coords(chart_to_point(half, p_min));
    const std::array<ScalarField, 3> qf{chart_q_field(0), chart_q_field(1), chart_q_field(2)};
    const std::array<ScalarField, 3> pf{coordinate_field(1), coordinate_field(2),
                                        coordinate_field(3)};
    double dev = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            dev = std::max(dev, std::abs(lie_poisson_bracket(pf[i], pf[j], y)));
            dev = std::max(dev, std::abs(lie_poisson_bracket(pf[i], qf[j], y) +
                                         (i == j ? 1.0 : 0.0)));
            double field = 0.0;
            for (int k = 0; k < 3; ++k) field += levi_civita(i, j, k) * c.p[k];
            dev = std::max(dev, std::abs(lie_poisson_bracket(qf[i], qf[j], y) +
                                         0.5 * field / (pn * pn * pn)));
        }
    return dev;
}

}  // namespace monoq
