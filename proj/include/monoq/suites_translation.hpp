#pragma once

#include <algorithm>
#include <cmath>

#include "monoq/cocycle.hpp"
#include "monoq/fd.hpp"
#include "monoq/operators.hpp"
#include "monoq/suites_common.hpp"

namespace monoq {

/// Cocycle translation and covariant-derivative checks: the four transport
/// cocycle properties, the projective composition law, the geometric phase
/// against the solid-angle oracle, and the commutation table of X, nabla,
/// J, P, L with the monopole curvature.
inline void run_translation_suite(CheckHarness& h) {
    const std::string S = "ej";
    const SuiteConfig& cfg = h.config();
    const SampleDomain& dom = h.domain();
    const KinematicsParams kp{cfg.r_min, cfg.eps_cone};
    const double te = cfg.tol_exact;
    const double tf = cfg.tol_fd;
    const double step = cfg.fd_step;
    using R = std::optional<double>;

    // Covariant derivative of a generic quaternion field: five-point stencil
    // for the flat term plus the analytic gauge term.
    auto nabla_fd = [&](int i, auto&& field, const Vec3& x) {
        return fd_partial4(field, x, i, step) +
               connection_a(basis3(i), x, cfg.r_min) * field(x);
    };
    // Rotation generator on a generic field, orbital term by stencil.
    auto l_fd = [&](int i, auto&& field, const Vec3& x) {
        Quaternion orbital{};
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const double eps = levi_civita(i, j, k);
                if (eps != 0.0) orbital += (eps * x[j]) * fd_partial4(field, x, k, step);
            }
        return orbital - 0.5 * (Quaternion::pure(basis3(i)) * field(x));
    };
    // Keeps the whole stencil outside the exclusion radius.
    auto stencil_safe = [&](const Vec3& x) { return norm(x) > cfg.r_min + 3.0 * step; };

    h.sampled(S, "ej.cocycle_identity", te, "", [&](CounterRng& rng) -> R {
        const Vec3 x = dom.point(rng);
        return norm(cocycle_w({}, x, kp) - Quaternion::identity());
    });

    h.sampled(S, "ej.cocycle_unit_norm", te, "", [&](CounterRng& rng) -> R {
        const auto pr = dom.translation_pair(rng);
        return std::abs(norm(cocycle_w(pr.a, pr.x, kp)) - 1.0);
    });

    h.sampled(S, "ej.cocycle_inverse_conjugate", te, "", [&](CounterRng& rng) -> R {
        const auto pr = dom.translation_pair(rng);
        return norm(cocycle_w(pr.a, pr.x, kp) - conj(cocycle_w(-1.0 * pr.a, pr.x + pr.a, kp)));
    });

    h.sampled(S, "ej.cocycle_ray_additivity", te, "", [&](CounterRng& rng) -> R {
        const Vec3 x = dom.point(rng);
        const Vec3 a = rng.in_box(cfg.box);
        const double s = rng.symmetric();
        const double t = rng.symmetric();
        const Quaternion lhs = cocycle_w(t * a, x + s * a, kp) * cocycle_w(s * a, x, kp);
        return norm(lhs - cocycle_w((s + t) * a, x, kp));
    });

    h.sampled(S, "ej.cocycle_axis_transport", te, "", [&](CounterRng& rng) -> R {
        const auto pr = dom.translation_pair(rng);
        const Quaternion w = cocycle_w(pr.a, pr.x, kp);
        return norm(w * jdir(pr.x, cfg.r_min).q() * conj(w) -
                    jdir(pr.x + pr.a, cfg.r_min).q());
    });

    h.sampled(S, "ej.multiplier_inverse_pair", te, "", [&](CounterRng& rng) -> R {
        const Vec3 x = dom.point(rng);
        const Vec3 a = rng.in_box(cfg.box);
        const Vec3 b = rng.in_box(cfg.box);
        const double d1 = norm(multiplier_m(a, -1.0 * a, x, kp) - Quaternion::identity());
        const double d2 = norm(multiplier_m(a, {}, x, kp) - Quaternion::identity());
        const double d3 = norm(multiplier_m({}, b, x, kp) - Quaternion::identity());
        return std::max({d1, d2, d3});
    });

    h.sampled(S, "ej.multiplier_coplanar", te,
              "planes through the origin enclose no flux, so the multiplier is central:"
              " +1, or -1 once the composed arc wraps past a half turn",
              [&](CounterRng& rng) -> R {
                  const Vec3 x = dom.point(rng);
                  const Vec3 r = rng.in_box(cfg.box);
                  const Vec3 a = rng.symmetric() * x + rng.symmetric() * r;
                  const Vec3 b = rng.symmetric() * x + rng.symmetric() * r;
                  const Quaternion m = multiplier_m(a, b, x, kp);
                  const Quaternion one = Quaternion::identity();
                  return std::min(norm(m - one), norm(m + one));
              });

    h.sampled(S, "ej.multiplier_radial_axis", te,
              "the multiplier is a rotation fixing the direction of the base point",
              [&](CounterRng& rng) -> R {
                  const Vec3 x = dom.point(rng);
                  const Vec3 a = rng.in_box(cfg.box);
                  const Vec3 b = rng.in_box(cfg.box);
                  const Quaternion m = multiplier_m(a, b, x, kp);
                  const ImaginaryUnit ax = jdir(x, cfg.r_min);
                  return norm(m - exp_pure(ax, phase_angle_about(m, ax)));
              });

    h.sampled(S, "ej.translation_composition", te, "", [&](CounterRng& rng) -> R {
        const ProbeFunction psi = dom.probe(rng);
        const Vec3 x = dom.point(rng);
        const Vec3 a = rng.in_box(1.5);
        const Vec3 b = rng.in_box(1.5);
        const Vec3 y = x - a - b;
        const Quaternion lhs = cocycle_w(a, x - a, kp) * cocycle_w(b, y, kp) * psi.value(y);
        const Quaternion rhs = cocycle_w(a + b, y, kp) * multiplier_m(a, b, y, kp) * psi.value(y);
        return norm(lhs - rhs);
    });

    h.sampled(S, "ej.translation_associativity", te, "", [&](CounterRng& rng) -> R {
        const ProbeFunction psi = dom.probe(rng);
        const Vec3 x = dom.point(rng);
        const Vec3 a = rng.in_box(1.5);
        const Vec3 b = rng.in_box(1.5);
        const Vec3 c = rng.in_box(1.5);
        const Vec3 yab = x - a - b;
        const Vec3 z = yab - c;
        const Quaternion tail = psi.value(z);
        const Quaternion f1 =
            cocycle_w(a, x - a, kp) * cocycle_w(b, yab, kp) * cocycle_w(c, z, kp) * tail;
        const Quaternion f2 = cocycle_w(a + b, yab, kp) * multiplier_m(a, b, yab, kp) *
                              cocycle_w(c, z, kp) * tail;
        const Quaternion f3 =
            cocycle_w(a, x - a, kp) * cocycle_w(b + c, z, kp) * multiplier_m(b, c, z, kp) * tail;
        return std::max({norm(f1 - f2), norm(f1 - f3), norm(f2 - f3)});
    });

    h.sampled(S, "ej.geometric_phase_ratio", tf,
              "ratio +1/2 under the orientation fixed by rotate_vector; the solid-angle "
              "triangle (x, x+b, x+a+b) follows the b-then-a transport path of m(a,b;x)",
              [&](CounterRng& rng) -> R {
                  const Vec3 x = dom.point(rng);
                  const Vec3 a = rng.in_box(cfg.box);
                  const Vec3 b = rng.in_box(cfg.box);
                  const double omega = solid_angle(x, x + b, x + a + b, cfg.eps_cone);
                  if (std::abs(omega) < 1e-3) return std::nullopt;
                  return std::abs(geometric_phase_ratio(a, b, x, kp) - 0.5);
              });

    h.sampled(S, "ej.probe_gradient_fd", tf, "", [&](CounterRng& rng) -> R {
        const ProbeFunction psi = dom.probe(rng);
        const Vec3 x = rng.in_box(cfg.box);
        auto value = [&](const Vec3& y) { return psi.value(y); };
        double dev = 0.0;
        for (int i = 0; i < 3; ++i) {
            const Quaternion analytic = psi.partial(i, x);
            const double rel = norm(fd_partial(value, x, i, step) - analytic) /
                               std::max(1.0, norm(analytic));
            dev = std::max(dev, rel);
        }
        return dev;
    });

    h.sampled(S, "ej.connection_partial_fd", tf, "", [&](CounterRng& rng) -> R {
        const Vec3 x = dom.point(rng);
        if (!stencil_safe(x)) return std::nullopt;
        double dev = 0.0;
        for (int j = 0; j < 3; ++j) {
            auto aj = [&](const Vec3& y) { return connection_a(basis3(j), y, cfg.r_min); };
            for (int i = 0; i < 3; ++i)
                dev = std::max(dev, norm(fd_partial4(aj, x, i, step) -
                                         connection_partial(i, j, x, cfg.r_min)));
        }
        return dev;
    });

    h.sampled(S, "ej.nabla_translation_generator", tf, "", [&](CounterRng& rng) -> R {
        const ProbeFunction psi = dom.probe(rng);
        const Vec3 x = dom.point(rng);
        if (!stencil_safe(x)) return std::nullopt;
        const Vec3 u = rng.unit_vector();
        auto flow = [&](double t) { return apply_u(t * u, psi, x, kp); };
        return norm(apply_nabla(u, psi, x, cfg.r_min) + fd_central4(flow, step));
    });

    h.sampled(S, "ej.gccr_canonical_pairs", tf, "", [&](CounterRng& rng) -> R {
        const ProbeFunction psi = dom.probe(rng);
        const Vec3 x = dom.point(rng);
        if (!stencil_safe(x)) return std::nullopt;
        const Quaternion at_x = psi.value(x);
        double dev = 0.0;
        for (int j = 0; j < 3; ++j) {
            auto xj_psi = [&](const Vec3& y) { return y[j] * psi.value(y); };
            for (int i = 0; i < 3; ++i) {
                const Quaternion nx = nabla_fd(i, xj_psi, x);
                const Quaternion xn = x[j] * apply_nabla(basis3(i), psi, x, cfg.r_min);
                const Quaternion target = (i == j) ? at_x : Quaternion{};
                dev = std::max(dev, norm(nx - xn - target));
            }
        }
        return dev;
    });

    h.sampled(S, "ej.position_commutant", te, "", [&](CounterRng& rng) -> R {
        const ProbeFunction psi = dom.probe(rng);
        const Vec3 x = dom.point(rng);
        const Quaternion at_x = psi.value(x);
        double dev = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                dev = std::max(dev, norm(apply_x(i, apply_x(j, at_x, x), x) -
                                         apply_x(j, apply_x(i, at_x, x), x)));
        return dev;
    });

    h.sampled(S, "ej.curvature_closed_form", tf, "", [&](CounterRng& rng) -> R {
        const ProbeFunction psi = dom.probe(rng);
        const Vec3 x = dom.point(rng);
        double dev = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j)
                dev = std::max(dev, curvature_check(i, j, x, psi, cfg.r_min));
        return dev;
    });

    h.sampled(S, "ej.presymplectic_pure", te, "", [&](CounterRng& rng) -> R {
        const Vec3 x = dom.point(rng);
        double dev = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                dev = std::max(dev, std::abs(curvature_op(i, j, x, cfg.r_min).w));
                dev = std::max(dev, norm(presymplectic_extract(i, j, x, cfg.r_min) +
                                         presymplectic_extract(j, i, x, cfg.r_min)));
            }
        return dev;
    });

    h.sampled(S, "ej.gccr_momentum_pair", tf,
              "the momentum commutator is the monopole field times the radial axis action "
              "+(1/2) eps_ijk x^k/|x|^3 j(x); the scalar coefficient alone omits j(x)",
              [&](CounterRng& rng) -> R {
                  const ProbeFunction psi = dom.probe(rng);
                  const Vec3 x = dom.point(rng);
                  if (!stencil_safe(x)) return std::nullopt;
                  const double r = norm(x);
                  double dev = 0.0;
                  for (int i = 0; i < 3; ++i)
                      for (int j = i + 1; j < 3; ++j) {
                          auto pj = [&](const Vec3& y) { return apply_p(j, psi, y, cfg.r_min); };
                          auto pi = [&](const Vec3& y) { return apply_p(i, psi, y, cfg.r_min); };
                          const Quaternion pipj = apply_j(nabla_fd(i, pj, x), x, cfg.r_min);
                          const Quaternion pjpi = apply_j(nabla_fd(j, pi, x), x, cfg.r_min);
                          double strength = 0.0;
                          for (int k = 0; k < 3; ++k) strength += levi_civita(i, j, k) * x[k];
                          const Quaternion target = (0.5 * strength / (r * r * r)) *
                                                    apply_j(psi.value(x), x, cfg.r_min);
                          dev = std::max(dev, norm(pipj - pjpi - target));
                      }
                  return dev;
              });

    h.sampled(S, "ej.axis_involution_unitary", te, "", [&](CounterRng& rng) -> R {
        const ProbeFunction psi = dom.probe(rng);
        const Vec3 x = dom.point(rng);
        const Quaternion v = psi.value(x);
        const Quaternion jv = apply_j(v, x, cfg.r_min);
        const double sq = norm(apply_j(jv, x, cfg.r_min) + v);
        const double iso = std::abs(norm(jv) - norm(v));
        return std::max(sq, iso);
    });

    h.sampled(S, "ej.nabla_j_commutant", tf, "", [&](CounterRng& rng) -> R {
        const ProbeFunction psi = dom.probe(rng);
        const Vec3 x = dom.point(rng);
        if (!stencil_safe(x)) return std::nullopt;
        auto jpsi = [&](const Vec3& y) { return apply_j(psi.value(y), y, cfg.r_min); };
        double dev = 0.0;
        for (int i = 0; i < 3; ++i) {
            const Quaternion nj = nabla_fd(i, jpsi, x);
            const Quaternion jn = apply_j(apply_nabla(basis3(i), psi, x, cfg.r_min), x, cfg.r_min);
            dev = std::max(dev, norm(nj - jn));
        }
        return dev;
    });

    h.sampled(S, "ej.angular_momentum_j_commutant", tf, "", [&](CounterRng& rng) -> R {
        const ProbeFunction psi = dom.probe(rng);
        const Vec3 x = dom.point(rng);
        if (!stencil_safe(x)) return std::nullopt;
        auto jpsi = [&](const Vec3& y) { return apply_j(psi.value(y), y, cfg.r_min); };
        double dev = 0.0;
        for (int i = 0; i < 3; ++i) {
            const Quaternion lj = l_fd(i, jpsi, x);
            const Quaternion jl = apply_j(apply_l(i, psi, x), x, cfg.r_min);
            dev = std::max(dev, norm(lj - jl));
        }
        return dev;
    });

    h.sampled(S, "ej.angular_momentum_closure", tf,
              "so(3) closure with the left-acting spin term: [L_i, L_j] = -L_k, cyclic",
              [&](CounterRng& rng) -> R {
                  const ProbeFunction psi = dom.probe(rng);
                  const Vec3 x = dom.point(rng);
                  double dev = 0.0;
                  for (int i = 0; i < 3; ++i) {
                      const int j = (i + 1) % 3;
                      const int k = (i + 2) % 3;
                      auto li = [&](const Vec3& y) { return apply_l(i, psi, y); };
                      auto lj = [&](const Vec3& y) { return apply_l(j, psi, y); };
                      const Quaternion comm = l_fd(i, lj, x) - l_fd(j, li, x);
                      dev = std::max(dev, norm(comm + apply_l(k, psi, x)));
                  }
                  return dev;
              });
}

}  // namespace monoq
