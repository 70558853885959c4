#include <catch2/catch_amalgamated.hpp>

#include "monoq/monoq.hpp"

using namespace monoq;

namespace {
constexpr double kPi = 3.14159265358979323846;

double qdist(const Quaternion& a, const Quaternion& b) { return norm(a - b); }
}  // namespace

TEST_CASE("cocycle of a quarter-turn translation") {
    const Quaternion w = cocycle_w({0, 1, 0}, {1, 0, 0});
    const Quaternion expected{std::cos(kPi / 8.0), {0, 0, std::sin(kPi / 8.0)}};
    CHECK(qdist(w, expected) < 1e-15);
}

TEST_CASE("cocycle basics: identity, unit norm, aligned displacement") {
    const Vec3 x{0.7, -1.1, 0.4};
    CHECK(qdist(cocycle_w({}, x), Quaternion::identity()) == 0.0);
    CHECK(qdist(cocycle_w(2.5 * x, x), Quaternion::identity()) < 1e-15);
    const Quaternion w = cocycle_w({0.3, 0.9, -0.2}, x);
    CHECK(std::abs(norm(w) - 1.0) < 1e-15);
}

TEST_CASE("cocycle inverse is the conjugate from the far end") {
    const Vec3 x{1.0, 0.2, -0.6}, a{-0.4, 0.8, 0.5};
    CHECK(qdist(cocycle_w(a, x), conj(cocycle_w(-a, x + a))) < 1e-15);
}

TEST_CASE("cocycle is additive along a ray of translations") {
    const Vec3 a{0.3, 0.4, 0.0}, x{1.0, 0.0, 1.0};
    const double s = 0.7, t = 1.3;
    const Quaternion lhs = cocycle_w(t * a, x + s * a) * cocycle_w(s * a, x);
    CHECK(qdist(lhs, cocycle_w((s + t) * a, x)) < 1e-15);
}

TEST_CASE("cocycle transports the radial axis") {
    const Vec3 x{0.9, -0.3, 0.5}, a{0.2, 0.7, -0.4};
    const Quaternion w = cocycle_w(a, x);
    const Quaternion moved = w * jdir(x).q() * conj(w);
    CHECK(qdist(moved, jdir(x + a).q()) < 1e-15);
}

TEST_CASE("cocycle rejects singular and antipodal configurations") {
    CHECK_THROWS_AS(cocycle_w({1, 0, 0}, {0.05, 0, 0}), SingularPoint);
    CHECK_THROWS_AS(cocycle_w({-0.95, 0, 0}, {1, 0, 0}), SingularPoint);
    CHECK_THROWS_AS(cocycle_w({-3, 0, 0}, {1, 0, 0}), AntipodalTranslation);
    CHECK_THROWS_AS(cocycle_w({-3, 1e-5, 0}, {1, 0, 0}), AntipodalTranslation);
}

TEST_CASE("multiplier collapses for inverse and coplanar translations") {
    const Vec3 x{0.8, 0.1, -1.2}, a{0.5, -0.3, 0.6};
    CHECK(qdist(multiplier_m(a, -a, x), Quaternion::identity()) < 1e-15);
    CHECK(qdist(multiplier_m(a, {}, x), Quaternion::identity()) == 0.0);
    CHECK(qdist(multiplier_m({}, a, x), Quaternion::identity()) < 1e-15);

    const Vec3 r{0.2, 0.9, 0.4};
    const Vec3 b1 = 0.7 * x + 0.3 * r, b2 = -0.4 * x + 1.1 * r;
    CHECK(qdist(multiplier_m(b1, b2, x), Quaternion::identity()) < 1e-14);
}

TEST_CASE("multiplier fixes the radial direction") {
    const Vec3 x{0.6, -0.8, 1.0}, a{0.9, 0.2, -0.5}, b{-0.3, 0.7, 0.4};
    const Quaternion m = multiplier_m(a, b, x);
    CHECK(std::abs(norm(m) - 1.0) < 1e-15);
    const UnitQuaternion s(m);
    CHECK(norm(rotate_vector(s, x) - x) < 1e-14);
}

TEST_CASE("twisted translations compose through the multiplier") {
    const ProbeFunction psi({0.2, -0.1, 0.3}, 2.0, {0.7, {0.2, -0.4, 1.0}},
                            {Quaternion{0.1, {0, 0.2, 0}}, Quaternion{-0.3, {0.1, 0, 0}},
                             Quaternion{0.05, {0, 0, -0.2}}});
    const Vec3 x{1.1, 0.4, -0.7}, a{0.4, -0.2, 0.3}, b{-0.1, 0.5, 0.2};
    const Vec3 y = x - a - b;
    const Quaternion lhs = cocycle_w(a, x - a) * apply_u(b, psi, x - a);
    const Quaternion rhs = cocycle_w(a + b, y) * multiplier_m(a, b, y) * psi.value(y);
    CHECK(qdist(lhs, rhs) < 1e-14);
}

TEST_CASE("solid angle of the positive octant") {
    const Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    CHECK(std::abs(solid_angle(e1, e2, e3) - kPi / 2.0) < 1e-15);
    CHECK(std::abs(solid_angle(e2, e1, e3) + kPi / 2.0) < 1e-15);
    CHECK(solid_angle(e1, e1, e3) == 0.0);
    CHECK_THROWS_AS(solid_angle(e1, {1.0, 1e-5, 0.0}, e3), DegenerateTriangle);
    CHECK_THROWS_AS(solid_angle(e1, {-1.0, 1e-5, 0.0}, e3), DegenerateTriangle);
}

TEST_CASE("phase angle about an axis reads off the exponent") {
    const ImaginaryUnit u({0.3, -0.5, 0.8});
    CHECK(std::abs(phase_angle_about(exp_pure(u, 0.9), u) - 0.9) < 1e-14);
    CHECK(std::abs(phase_angle_about(exp_pure(u, -1.7), u) + 1.7) < 1e-14);
}

TEST_CASE("geometric phase ratio equals one half on the octant path") {
    const Vec3 x{0, 0, 1};
    const Vec3 b = Vec3{1, 0, 0} - x;
    const Vec3 a = Vec3{0, 1, 0} - Vec3{1, 0, 0};
    CHECK(std::abs(geometric_phase_ratio(a, b, x) - 0.5) < 1e-14);

    const Quaternion m = multiplier_m(a, b, x);
    const Quaternion expected = exp_pure(ImaginaryUnit({0, 0, 1}), kPi / 4.0);
    CHECK(qdist(m, expected) < 1e-15);
}

TEST_CASE("geometric phase ratio rejects flat transport triangles") {
    const Vec3 x{1, 0, 0};
    CHECK_THROWS_AS(geometric_phase_ratio({0.2, 0, 0}, {0.3, 0, 0}, x), DegenerateTriangle);
    const Vec3 b{-0.3, 0.7, 0.0};
    const Vec3 a = Vec3{-1, 1, 0} - b;
    CHECK_THROWS_AS(geometric_phase_ratio(a, b, x), IllConditioned);
}
