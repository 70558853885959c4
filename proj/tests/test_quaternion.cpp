#include <catch2/catch_amalgamated.hpp>

#include "monoq/monoq.hpp"

using namespace monoq;

namespace {
constexpr double kPi = 3.14159265358979323846;

double qdist(const Quaternion& a, const Quaternion& b) { return norm(a - b); }
}  // namespace

TEST_CASE("hamilton multiplication table") {
    const Quaternion e1 = Quaternion::pure({1, 0, 0});
    const Quaternion e2 = Quaternion::pure({0, 1, 0});
    const Quaternion e3 = Quaternion::pure({0, 0, 1});
    CHECK(qdist(e1 * e2, e3) == 0.0);
    CHECK(qdist(e2 * e3, e1) == 0.0);
    CHECK(qdist(e3 * e1, e2) == 0.0);
    CHECK(qdist(e1 * e1, -Quaternion::identity()) == 0.0);
    CHECK(qdist(e1 * e2, -(e2 * e1)) == 0.0);
}

TEST_CASE("conjugate product gives the squared norm") {
    const Quaternion q{3.0, {4.0, 0.0, 0.0}};
    CHECK(qdist(q * conj(q), 25.0 * Quaternion::identity()) == 0.0);
    CHECK(norm_sq(q) == 25.0);
    CHECK(qdist(q * inverse(q), Quaternion::identity()) < 1e-15);
}

TEST_CASE("norm is multiplicative") {
    const Quaternion a{0.3, {-1.2, 0.7, 2.0}};
    const Quaternion b{-0.8, {0.1, 1.5, -0.4}};
    CHECK(std::abs(norm(a * b) - norm(a) * norm(b)) < 1e-14);
}

TEST_CASE("exp of a pure quaternion") {
    const ImaginaryUnit u({0.0, 0.0, 1.0});
    const Quaternion q = exp_pure(u, kPi / 3.0);
    CHECK(std::abs(q.w - 0.5) < 1e-15);
    CHECK(std::abs(q.v.z - std::sqrt(3.0) / 2.0) < 1e-15);
    CHECK(qdist(exp_pure(u, 0.4) * exp_pure(u, 0.9), exp_pure(u, 1.3)) < 1e-15);
}

TEST_CASE("exp and log are inverse on the principal branch") {
    const Vec3 p{0.3, -0.7, 0.5};
    CHECK(norm(log_unit(exp_pure(p)) - p) < 1e-14);
    const ImaginaryUnit u({1.0, 2.0, -2.0});
    for (double theta : {0.01, 0.5, 1.5, 3.0}) {
        const Vec3 back = log_unit(exp_pure(u, theta));
        CHECK(norm(back - theta * u.axis) < 1e-13);
    }
}

TEST_CASE("pauli dictionary is a homomorphism") {
    const Quaternion a{0.3, {-1.2, 0.7, 2.0}};
    const Quaternion b{-0.8, {0.1, 1.5, -0.4}};
    CHECK(pauli_check(a, b) < 1e-14);
    const Quaternion e1 = Quaternion::pure({1, 0, 0});
    const Quaternion e2 = Quaternion::pure({0, 1, 0});
    CHECK(pauli_check(e1, e2) == 0.0);
}

TEST_CASE("unit quaternions map to unitary matrices") {
    const UnitQuaternion s(Quaternion{0.3, {-1.2, 0.7, 2.0}});
    const Mat2c prod = matmul(pauli_matrix(s.q), pauli_matrix(conj(s.q)));
    CHECK(std::abs(prod[0][0] - 1.0) < 1e-15);
    CHECK(std::abs(prod[1][1] - 1.0) < 1e-15);
    CHECK(std::abs(prod[0][1]) < 1e-15);
    CHECK(std::abs(prod[1][0]) < 1e-15);
}

TEST_CASE("rotation by conjugation: angle doubling and orientation") {
    const UnitQuaternion s(exp_pure(ImaginaryUnit({0, 0, 1}), kPi / 4.0));
    const Vec3 image = rotate_vector(s, {1, 0, 0});
    CHECK(norm(image - Vec3{0, 1, 0}) < 1e-15);

    const UnitQuaternion half(exp_pure(ImaginaryUnit({0, 0, 1}), kPi / 6.0));
    const Vec3 turned = rotate_vector(half, {1, 0, 0});
    CHECK(std::abs(turned.x - 0.5) < 1e-15);
    CHECK(std::abs(turned.y - std::sqrt(3.0) / 2.0) < 1e-15);
}

TEST_CASE("rotation preserves dot and cross products") {
    const UnitQuaternion s(Quaternion{0.4, {0.3, -0.9, 0.2}});
    const Vec3 a{1.2, -0.5, 0.7}, b{-0.3, 0.8, 1.1};
    const Vec3 ra = rotate_vector(s, a), rb = rotate_vector(s, b);
    CHECK(std::abs(dot(ra, rb) - dot(a, b)) < 1e-14);
    CHECK(norm(cross(ra, rb) - rotate_vector(s, cross(a, b))) < 1e-14);
}

TEST_CASE("jdir is the radial imaginary unit") {
    const ImaginaryUnit j = jdir({3.0, 4.0, 0.0});
    CHECK(norm(j.axis - Vec3{0.6, 0.8, 0.0}) < 1e-15);
    CHECK_THROWS_AS(jdir({0.05, 0.0, 0.0}), SingularPoint);
    CHECK_THROWS_AS(jdir({0.05, 0.0, 0.0}, 0.2), SingularPoint);
}

TEST_CASE("hopf projection is invariant along the circle fiber") {
    const UnitQuaternion s(Quaternion{0.4, {0.3, -0.9, 0.2}});
    const Vec3 base = hopf_project(s);
    CHECK(std::abs(norm(base) - 1.0) < 1e-14);
    for (double t : {0.3, 1.1, 2.9}) {
        const UnitQuaternion moved(exp_pure(ImaginaryUnit({0, 0, 1}), t) * s.q);
        CHECK(norm(hopf_project(moved) - base) < 1e-14);
    }
    CHECK(norm(hopf_project(UnitQuaternion()) - Vec3{0, 0, 1}) < 1e-15);
}

TEST_CASE("degenerate constructions are rejected") {
    CHECK_THROWS_AS(UnitQuaternion(Quaternion{}), IllConditioned);
    CHECK_THROWS_AS(ImaginaryUnit(Vec3{1e-12, 0, 0}), IllConditioned);
}
