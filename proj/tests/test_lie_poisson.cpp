#include <catch2/catch_amalgamated.hpp>

#include "monoq/monoq.hpp"

using namespace monoq;

namespace {
constexpr double kPi = 3.14159265358979323846;

const OrbitChartPoint kChart{{0.4, -0.2, 0.3}, {0.3, 1.2, -0.5}, 2.0};
}  // namespace

TEST_CASE("coordinate embedding roundtrips") {
    const CoadjointPoint y{1.7, {0.4, -0.9, 0.3}, {0.2, 0.5, -0.6}, {-0.3, 0.1, 0.8}};
    const CoadjointPoint back = from_coords(to_coords(y));
    CHECK(back.h == y.h);
    CHECK(norm(back.p - y.p) == 0.0);
    CHECK(norm(back.j - y.j) == 0.0);
    CHECK(norm(back.k - y.k) == 0.0);
}

TEST_CASE("derived structure constants land on the expected entries") {
    const StructureConstants& sc = structure_constants();
    CHECK(sc.fd_residual < 1e-9);

    CHECK(sc.c[4][5][6] == 1.0);   // {j1, j2} = +j3
    CHECK(sc.c[5][4][6] == -1.0);
    CHECK(sc.c[4][2][3] == 1.0);   // {j1, p2} = +p3
    CHECK(sc.c[4][8][9] == 1.0);   // {j1, k2} = +k3
    CHECK(sc.c[1][7][0] == -1.0);  // {p1, k1} = -h
    CHECK(sc.c[1][8][0] == 0.0);
    CHECK(sc.c[4][4][4] == 0.0);
    CHECK(sc.c[1][2][0] == 0.0);   // translations commute
    CHECK(sc.c[7][8][6] == -1.0);  // {k1, k2} = -j3
}

TEST_CASE("derived table satisfies the jacobi identity") {
    CHECK(jacobi_residual() < 1e-12);
}

TEST_CASE("absurd differencing step is rejected") {
    CHECK_THROWS_AS(derive_structure_constants(10.0), InconsistentTable);
}

TEST_CASE("chart brackets reproduce the canonical pairs") {
    const Coord10 y = to_coords(chart_to_point(kChart));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double pq = lie_poisson_bracket(coordinate_field(1 + i), chart_q_field(j), y);
            CHECK(std::abs(pq + (i == j ? 1.0 : 0.0)) < 1e-13);
            const double pp = lie_poisson_bracket(coordinate_field(1 + i),
                                                  coordinate_field(1 + j), y);
            CHECK(std::abs(pp) < 1e-15);
        }
}

TEST_CASE("position bracket carries the helicity monopole") {
    const OrbitChartPoint north{{}, {0, 0, 1}, 2.0};
    const Coord10 y = to_coords(chart_to_point(north));
    const double q1q2 = lie_poisson_bracket(chart_q_field(0), chart_q_field(1), y);
    CHECK(std::abs(q1q2 + north.lambda) < 1e-14);

    const OrbitChartPoint scaled{{}, {0, 0, 2}, 2.0};
    const Coord10 ys = to_coords(chart_to_point(scaled));
    const double scaled_bracket = lie_poisson_bracket(chart_q_field(0), chart_q_field(1), ys);
    CHECK(std::abs(scaled_bracket + north.lambda / 4.0) < 1e-14);
}

TEST_CASE("finite-difference gradients agree with analytic ones") {
    const Coord10 y = to_coords(chart_to_point(kChart));
    const ScalarField analytic = chart_q_field(1);
    const ScalarField fd = fd_field(analytic.value);
    const Coord10 ga = analytic.gradient(y);
    const Coord10 gf = fd.gradient(y);
    for (int i = 0; i < kCoadDim; ++i) CHECK(std::abs(ga[i] - gf[i]) < 1e-8);
}

TEST_CASE("symplectic matrix inverts to minus the bracket bivector") {
    const MatN<6> omega = symplectic_matrix(kChart);
    const MatN<6> inv = mat_inverse(omega);
    const Coord10 y = to_coords(chart_to_point(kChart));
    const std::array<ScalarField, 6> z{chart_q_field(0),    chart_q_field(1),
                                       chart_q_field(2),    coordinate_field(1),
                                       coordinate_field(2), coordinate_field(3)};
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            CHECK(std::abs(-inv[a][b] - lie_poisson_bracket(z[a], z[b], y)) < 1e-12);
}

TEST_CASE("symplectic volume is one at every helicity") {
    for (double lambda : {-2.0, 0.0, 0.5, 3.0}) {
        const OrbitChartPoint c{{0.4, -0.2, 0.3}, {0.3, 1.2, -0.5}, lambda};
        CHECK(std::abs(mat_determinant(symplectic_matrix(c)) - 1.0) < 1e-14);
    }
    CHECK_THROWS_AS(symplectic_matrix({{}, {}, 1.0}), MomentumTooSmall);
}

TEST_CASE("chart actions of the closed-form factors") {
    CHECK(coad_q_action_check(GroupFactor::time_translation(0.7), kChart) < 1e-13);
    CHECK(coad_q_action_check(GroupFactor::space_translation({0.3, -0.5, 0.2}), kChart) < 1e-13);
    CHECK(coad_q_action_check(GroupFactor::rotation(kPi / 3.0, {0.2, 0.5, -0.8}), kChart) < 1e-13);
    CHECK_THROWS_AS(coad_q_action_check(GroupFactor::boost(0.3, {0, 0, 1}), kChart),
                    std::invalid_argument);
}

TEST_CASE("half-helicity chart matches the unit monopole table") {
    CHECK(monopole_duality_check(kChart) < 1e-13);
    const OrbitChartPoint north{{}, {0, 0, 1}, 0.5};
    CHECK(monopole_duality_check(north) < 1e-14);
    CHECK_THROWS_AS(monopole_duality_check({{}, {}, 0.5}), MomentumTooSmall);
}
