#pragma once

#include <algorithm>
#include <cmath>

#include "monoq/lie_poisson.hpp"
#include "monoq/linalg.hpp"
#include "monoq/poincare.hpp"
#include "monoq/suites_common.hpp"

namespace monoq {

/// Coadjoint action checks: group words, invariants, the massless chart, the
/// finite-difference structure constants, the Lie-Poisson brackets, the orbit
/// symplectic form and the monopole duality.
inline void run_orbit_suite(CheckHarness& h) {
    const std::string S = "orbit";
    const SuiteConfig& cfg = h.config();
    const SampleDomain& dom = h.domain();
    const double te = cfg.tol_exact;
    const double tf = cfg.tol_fd;
    using R = std::optional<double>;
    constexpr double two_pi = 6.283185307179586476925286766559;

    auto rand_point = [&](CounterRng& rng) {
        return CoadjointPoint{3.0 * rng.symmetric(), rng.in_box(3.0), rng.in_box(3.0),
                              rng.in_box(3.0)};
    };
    auto rand_factor = [&](CounterRng& rng) {
        switch (rng.next_u64() % 4) {
            case 0: return GroupFactor::time_translation(rng.symmetric());
            case 1: return GroupFactor::space_translation(rng.in_box(1.0));
            case 2: return GroupFactor::rotation(3.0 * rng.symmetric(), rng.unit_vector());
            default: return GroupFactor::boost(rng.symmetric(), rng.unit_vector());
        }
    };
    auto inverse_of = [](const GroupFactor& g) {
        switch (g.kind) {
            case GroupFactor::Kind::time_translation:
                return GroupFactor::time_translation(-g.scalar);
            case GroupFactor::Kind::space_translation:
                return GroupFactor::space_translation(-1.0 * g.vec);
            case GroupFactor::Kind::rotation: return GroupFactor::rotation(-g.scalar, g.vec);
            default: return GroupFactor::boost(-g.scalar, g.vec);
        }
    };
    auto dist = [](const CoadjointPoint& a, const CoadjointPoint& b) {
        const Coord10 ca = to_coords(a), cb = to_coords(b);
        double d = 0.0;
        for (int i = 0; i < kCoadDim; ++i) d = std::max(d, std::abs(ca[i] - cb[i]));
        return d;
    };
    auto rand_chart = [&](CounterRng& rng) {
        return OrbitChartPoint{rng.in_box(cfg.box), dom.point(rng), 2.0 * rng.symmetric()};
    };

    h.sampled(S, "orbit.factor_inverse_roundtrip", te, "", [&](CounterRng& rng) -> R {
        const CoadjointPoint y = rand_point(rng);
        const GroupFactor g = rand_factor(rng);
        return dist(coad_apply(inverse_of(g), coad_apply(g, y)), y);
    });

    h.sampled(S, "orbit.rotation_periodicity", te, "", [&](CounterRng& rng) -> R {
        const CoadjointPoint y = rand_point(rng);
        const Vec3 axis = rng.unit_vector();
        const double alpha = 3.0 * rng.symmetric();
        const double d1 = dist(coad_apply(GroupFactor::rotation(alpha + two_pi, axis), y),
                               coad_apply(GroupFactor::rotation(alpha, axis), y));
        const double d2 = dist(coad_apply(GroupFactor::rotation(two_pi, axis), y), y);
        return std::max(d1, d2);
    });

    h.sampled(S, "orbit.same_axis_fusion", te, "", [&](CounterRng& rng) -> R {
        const CoadjointPoint y = rand_point(rng);
        const Vec3 axis = rng.unit_vector();
        const double s = rng.symmetric(), t = rng.symmetric();
        const double d1 =
            dist(coad_apply(GroupFactor::rotation(s, axis),
                            coad_apply(GroupFactor::rotation(t, axis), y)),
                 coad_apply(GroupFactor::rotation(s + t, axis), y));
        const double d2 = dist(coad_apply(GroupFactor::boost(s, axis),
                                          coad_apply(GroupFactor::boost(t, axis), y)),
                               coad_apply(GroupFactor::boost(s + t, axis), y));
        return std::max(d1, d2);
    });

    h.sampled(S, "orbit.casimir_word_invariance", tf,
              "relative error; the rounding amplification grows with the boost content"
              " of the word",
              [&](CounterRng& rng) -> R {
        const CoadjointPoint y = rand_point(rng);
        GroupFactor word[5] = {rand_factor(rng), rand_factor(rng), rand_factor(rng),
                               rand_factor(rng), rand_factor(rng)};
        const Casimirs before = casimirs(y);
        const Casimirs after = casimirs(coad_word(word, y));
        const double s1 = std::max({1.0, std::abs(before.c1), std::abs(after.c1)});
        const double s2 = std::max({1.0, std::abs(before.c2), std::abs(after.c2)});
        return std::max(std::abs(after.c1 - before.c1) / s1,
                        std::abs(after.c2 - before.c2) / s2);
    });

    h.sampled(S, "orbit.pauli_lubanski_covariance", te, "", [&](CounterRng& rng) -> R {
        const CoadjointPoint y = rand_point(rng);
        const GroupFactor g = rand_factor(rng);
        const PauliLubanski wv = pauli_lubanski(y);
        const CoadjointPoint carried = coad_apply(g, CoadjointPoint{wv.w0, wv.w, {}, {}});
        const PauliLubanski actual = pauli_lubanski(coad_apply(g, y));
        return std::max(std::abs(actual.w0 - carried.h), norm(actual.w - carried.p));
    });

    h.sampled(S, "orbit.pauli_lubanski_orthogonality", te, "", [&](CounterRng& rng) -> R {
        const CoadjointPoint y = rand_point(rng);
        const PauliLubanski wv = pauli_lubanski(y);
        return std::abs(-y.h * wv.w0 + dot(y.p, wv.w));
    });

    h.sampled(S, "orbit.chart_roundtrip", te, "", [&](CounterRng& rng) -> R {
        const OrbitChartPoint c = rand_chart(rng);
        const CoadjointPoint y = chart_to_point(c);
        const OrbitChartPoint back = point_to_chart(y);
        const Casimirs cas = casimirs(y);
        const PauliLubanski wv = pauli_lubanski(y);
        const double pn = norm(c.p);
        return std::max({norm(back.q - c.q), norm(back.p - c.p),
                         std::abs(back.lambda - c.lambda), std::abs(cas.c1), std::abs(cas.c2),
                         std::abs(dot(y.j, y.p) / pn - c.lambda),
                         std::abs(wv.w0 - c.lambda * pn), norm(wv.w - c.lambda * c.p)});
    });

    h.once(S, "orbit.structure_table_jacobi", te, "", [] {
        return jacobi_residual(structure_constants());
    });

    h.once(S, "orbit.structure_fd_regeneration", tf,
           "half-integer table re-derived from the group flow at an independent step size",
           [] {
               const auto raw = coad_flow_derivative(2e-5);
               const auto& sc = structure_constants();
               double dev = 0.0;
               for (int i = 0; i < kCoadDim; ++i)
                   for (int j = 0; j < kCoadDim; ++j)
                       for (int k = 0; k < kCoadDim; ++k)
                           dev = std::max(dev, std::abs(sc.c[i][j][k] + raw[i][j][k]));
               return dev;
           });

    h.sampled(S, "orbit.bracket_canonical_pairs", tf, "", [&](CounterRng& rng) -> R {
        const OrbitChartPoint c = rand_chart(rng);
        const Coord10 y = to_coords(chart_to_point(c));
        double dev = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const double pq = lie_poisson_bracket(coordinate_field(1 + i), chart_q_field(j), y);
                const double pp =
                    lie_poisson_bracket(coordinate_field(1 + i), coordinate_field(1 + j), y);
                dev = std::max(dev, std::abs(pq + (i == j ? 1.0 : 0.0)));
                dev = std::max(dev, std::abs(pp));
            }
        return dev;
    });

    h.sampled(S, "orbit.bracket_position_pair", tf, "", [&](CounterRng& rng) -> R {
        const OrbitChartPoint c = rand_chart(rng);
        const Coord10 y = to_coords(chart_to_point(c));
        const double pn3 = std::pow(norm(c.p), 3);
        double dev = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double field = 0.0;
                for (int k = 0; k < 3; ++k) field += levi_civita(i, j, k) * c.p[k];
                const double qq = lie_poisson_bracket(chart_q_field(i), chart_q_field(j), y);
                dev = std::max(dev, std::abs(qq + c.lambda * field / pn3));
            }
        return dev;
    });

    h.sampled(S, "orbit.symplectic_bivector_inverse", tf,
              "momentum-momentum block sign fixed so -Omega^(-1) is the bracket bivector, "
              "anchored by {p,q} = -delta",
              [&](CounterRng& rng) -> R {
                  const OrbitChartPoint c = rand_chart(rng);
                  const Coord10 y = to_coords(chart_to_point(c));
                  const MatN<6> omega = symplectic_matrix(c);
                  const MatN<6> inv = mat_inverse(omega);
                  ScalarField z[6] = {chart_q_field(0),  chart_q_field(1),  chart_q_field(2),
                                      coordinate_field(1), coordinate_field(2),
                                      coordinate_field(3)};
                  double dev = 0.0;
                  for (int a = 0; a < 6; ++a)
                      for (int b = 0; b < 6; ++b)
                          dev = std::max(dev, std::abs(-inv[a][b] -
                                                       lie_poisson_bracket(z[a], z[b], y)));
                  return dev;
              });

    h.sampled(S, "orbit.liouville_determinant", tf,
              "unit symplectic determinant at every helicity: d3q d3p is the invariant measure",
              [&](CounterRng& rng) -> R {
                  const OrbitChartPoint c = rand_chart(rng);
                  return std::abs(mat_determinant(symplectic_matrix(c)) - 1.0);
              });

    h.sampled(S, "orbit.chart_translation_action", tf, "", [&](CounterRng& rng) -> R {
        const OrbitChartPoint c = rand_chart(rng);
        GroupFactor g = GroupFactor::time_translation(rng.symmetric());
        switch (rng.next_u64() % 3) {
            case 0: break;
            case 1: g = GroupFactor::space_translation(rng.in_box(1.0)); break;
            default: g = GroupFactor::rotation(3.0 * rng.symmetric(), rng.unit_vector()); break;
        }
        return coad_q_action_check(g, c);
    });

    h.sampled(S, "orbit.monopole_duality", tf,
              "helicity 1/2 reproduces the unit-charge monopole bracket table under p <-> x "
              "exchange; the inverse-cube field normalization is the Jacobi-consistent one",
              [&](CounterRng& rng) -> R {
                  const OrbitChartPoint c = rand_chart(rng);
                  return monopole_duality_check(c);
              });
}

}  // namespace monoq
