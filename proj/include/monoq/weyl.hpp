#pragma once

#include <optional>
#include <span>

#include "monoq/cocycle.hpp"
#include "monoq/errors.hpp"
#include "monoq/probe.hpp"

namespace monoq {

/// Label (a, a') of an exponential displacement operator: a is the
/// translation part, a' the position-phase part.
struct WeylLabel {
    Vec3 a{};
    Vec3 a_prime{};

    WeylLabel operator+(const WeylLabel& o) const { return {a + o.a, a_prime + o.a_prime}; }
};

/// Factor ordering used to realize the displacement operator in closed form.
/// The two orderings differ by a unit phase exp(2 j(x-a) a.a') and are kept
/// side by side so the discrepancy can be measured; `px` (translation factor
/// leftmost) is the frozen default, fixed by the mixed-sector composition
/// oracle.
enum class WeylOrdering { px, xp };

/// Unit-quaternion prefactor of [T(alpha) psi](x) = prefactor * psi(x - a).
inline Quaternion weyl_prefactor(const WeylLabel& alpha, const Vec3& x,
                                 WeylOrdering form = WeylOrdering::px,
                                 const KinematicsParams& p = {}) {
    const Vec3& a = alpha.a;
    const Vec3& ap = alpha.a_prime;
    const Vec3 z = x - a;
    const Quaternion w = cocycle_w(a, z, p);
    const Vec3 jz = jdir(z, p.r_min).axis;
    if (form == WeylOrdering::px)
        return w * exp_pure(jz * dot(ap, z)) * exp_pure(jz * (-0.5 * dot(a, ap)));
    const Vec3 jx = jdir(x, p.r_min).axis;
    return exp_pure(jx * dot(ap, x)) * w * exp_pure(jz * (0.5 * dot(a, ap)));
}

/// Displacement operator value [T(alpha) psi](x).
inline Quaternion weyl_t(const WeylLabel& alpha, const ProbeFunction& psi, const Vec3& x,
                         WeylOrdering form = WeylOrdering::px, const KinematicsParams& p = {}) {
    return weyl_prefactor(alpha, x, form, p) * psi.value(x - alpha.a);
}

/// Pointwise deviation between the two factor orderings at x.
inline double weyl_form_deviation(const WeylLabel& alpha, const ProbeFunction& psi, const Vec3& x,
                                  const KinematicsParams& p = {}) {
    return norm(weyl_t(alpha, psi, x, WeylOrdering::px, p) -
                weyl_t(alpha, psi, x, WeylOrdering::xp, p));
}

/// Left quotient of the two orderings, prefactor_xp * prefactor_px^-1.
/// Unit quaternion; equals exp(2 j(x) a.a') identically.
inline Quaternion weyl_form_ratio(const WeylLabel& alpha, const Vec3& x,
                                  const KinematicsParams& p = {}) {
    return weyl_prefactor(alpha, x, WeylOrdering::xp, p) *
           conj(weyl_prefactor(alpha, x, WeylOrdering::px, p));
}

/// Composition defect D at x, defined through
///   [T(alpha) T(beta) psi](x) = prefactor(alpha+beta; x) D psi(x - a - b):
/// the composed value is stripped of the T(alpha+beta) phase on the left and
/// of psi on the right. Samples with |psi(x-a-b)| < 1e-8 are skipped
/// (nullopt) so psi is never inverted near zero.
inline std::optional<Quaternion> weyl_defect_at(const WeylLabel& alpha, const WeylLabel& beta,
                                                const ProbeFunction& psi, const Vec3& x,
                                                WeylOrdering form = WeylOrdering::px,
                                                const KinematicsParams& p = {}) {
    const Vec3 y = x - alpha.a - beta.a;
    const Quaternion tail = psi.value(y);
    if (norm(tail) < 1e-8) return std::nullopt;
    const Quaternion composed =
        weyl_prefactor(alpha, x, form, p) * weyl_t(beta, psi, x - alpha.a, form, p);
    return conj(weyl_prefactor(alpha + beta, x, form, p)) * composed * inverse(tail);
}

/// Defect predicted by the composition law: the translation multiplier times
/// the symplectic phase, both on the axis of x - a - b:
///   m(a, b; y) exp( (1/2) j(y) (a.b' - b.a') ),  y = x - a - b.
inline Quaternion weyl_predicted_defect(const WeylLabel& alpha, const WeylLabel& beta,
                                        const Vec3& x, const KinematicsParams& p = {}) {
    const Vec3 y = x - alpha.a - beta.a;
    const Quaternion m = multiplier_m(alpha.a, beta.a, y, p);
    const double phase = 0.5 * (dot(alpha.a, beta.a_prime) - dot(beta.a, alpha.a_prime));
    return m * exp_pure(jdir(y, p.r_min).axis * phase);
}

struct WeylDefectStats {
    std::size_t samples_used = 0;
    std::size_t samples_skipped = 0;
    double max_dev_from_predicted = 0.0;
    double max_unit_norm_defect = 0.0;
};

/// Composition defect statistics over a set of probe points. Points where
/// psi is too small or the geometry is inadmissible are skipped; throws
/// InsufficientSamples when more than half of the points were skipped.
inline WeylDefectStats weyl_compose_defect(const WeylLabel& alpha, const WeylLabel& beta,
                                           const ProbeFunction& psi, std::span<const Vec3> points,
                                           WeylOrdering form = WeylOrdering::px,
                                           const KinematicsParams& p = {}) {
    WeylDefectStats s;
    for (const Vec3& x : points) {
        std::optional<Quaternion> d;
        try {
            d = weyl_defect_at(alpha, beta, psi, x, form, p);
        } catch (const SingularPoint&) {
        } catch (const AntipodalTranslation&) {
        }
        if (!d) {
            ++s.samples_skipped;
            continue;
        }
        ++s.samples_used;
        s.max_dev_from_predicted = std::max(
            s.max_dev_from_predicted, norm(*d - weyl_predicted_defect(alpha, beta, x, p)));
        s.max_unit_norm_defect = std::max(s.max_unit_norm_defect, std::abs(norm(*d) - 1.0));
    }
    if (2 * s.samples_skipped > s.samples_used + s.samples_skipped)
        throw InsufficientSamples("weyl_compose_defect: more than half of the points skipped");
    return s;
}

}  // namespace monoq
