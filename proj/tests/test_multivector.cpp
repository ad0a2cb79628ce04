#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "multivector.hpp"
#include "rng.hpp"

using namespace bb;

namespace {

struct OracleEntry {
    int blade;
    double sign;
};

// Independent oracle: the full Cayley table of Cl(3,0) over the basis
// {1, e1, e2, e3, e23, e31, e12, e123}, worked out by hand and entered
// literally.  The library generates its table from the two
// product rules; any disagreement here is a kernel bug.
constexpr OracleEntry kOracle[8][8] = {
    // 1 row
    {{0, +1}, {1, +1}, {2, +1}, {3, +1}, {4, +1}, {5, +1}, {6, +1}, {7, +1}},
    // e1 row
    {{1, +1}, {0, +1}, {6, +1}, {5, -1}, {7, +1}, {3, -1}, {2, +1}, {4, +1}},
    // e2 row
    {{2, +1}, {6, -1}, {0, +1}, {4, +1}, {3, +1}, {7, +1}, {1, -1}, {5, +1}},
    // e3 row
    {{3, +1}, {5, +1}, {4, -1}, {0, +1}, {2, -1}, {1, +1}, {7, +1}, {6, +1}},
    // e23 row
    {{4, +1}, {7, +1}, {3, -1}, {2, +1}, {0, -1}, {6, -1}, {5, +1}, {1, -1}},
    // e31 row
    {{5, +1}, {3, +1}, {7, +1}, {1, -1}, {6, +1}, {0, -1}, {4, -1}, {2, -1}},
    // e12 row
    {{6, +1}, {2, -1}, {1, +1}, {7, +1}, {5, -1}, {4, +1}, {0, -1}, {3, -1}},
    // e123 row
    {{7, +1}, {4, +1}, {5, +1}, {6, +1}, {1, -1}, {2, -1}, {3, -1}, {0, -1}},
};

Multivector basis_blade(int i) { return Multivector::blade(static_cast<Blade>(i)); }

Multivector random_mv(TrialRng& rng) {
    Multivector u;
    for (int i = 0; i < 8; ++i) u.c[i] = 2.0 * rng.next_unit() - 1.0;
    return u;
}

} // namespace

TEST_CASE("generated structure constants match the hand-written table") {
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            Multivector p = basis_blade(i) * basis_blade(j);
            for (int k = 0; k < 8; ++k) {
                double expected = (k == kOracle[i][j].blade) ? kOracle[i][j].sign : 0.0;
                INFO("blade ", i, " * blade ", j, " coefficient ", k);
                CHECK(p.c[k] == expected);
            }
        }
    }
}

TEST_CASE("basis vectors square to one and anticommute") {
    for (int i = 1; i <= 3; ++i) {
        Multivector ei = basis_blade(i);
        CHECK(approx_equal(ei * ei, Multivector::scalar(1.0), 0.0));
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            Multivector ej = basis_blade(j);
            CHECK(approx_equal(ei * ej + ej * ei, Multivector{}, 0.0));
        }
    }
}

TEST_CASE("geometric product worked examples") {
    Multivector e1 = basis_blade(kE1);
    Multivector e2 = basis_blade(kE2);
    CHECK(approx_equal(e1 * e2, basis_blade(kE12), 0.0));
    CHECK(approx_equal(e2 * e1, -basis_blade(kE12), 0.0));

    Multivector i3 = unit_pseudoscalar();
    CHECK(approx_equal(i3 * i3, Multivector::scalar(-1.0), 0.0));

    TrialRng rng(17, 0);
    Multivector u = random_mv(rng);
    CHECK(approx_equal(Multivector::scalar(1.0) * u, u, 0.0));
    CHECK(approx_equal(u * Multivector::scalar(1.0), u, 0.0));
}

TEST_CASE("geometric product is associative") {
    TrialRng rng(18, 0);
    for (int n = 0; n < 1000; ++n) {
        Multivector u = random_mv(rng);
        Multivector v = random_mv(rng);
        Multivector w = random_mv(rng);
        CHECK(max_coeff_distance((u * v) * w, u * (v * w)) <= 1e-12);
    }
}

TEST_CASE("pseudoscalar commutes with everything") {
    TrialRng rng(19, 0);
    Multivector i3 = unit_pseudoscalar();
    for (int n = 0; n < 100; ++n) {
        Multivector u = random_mv(rng);
        CHECK(max_coeff_distance(i3 * u, u * i3) <= 1e-12);
    }
    CHECK(approx_equal(Pseudoscalar{-1}.embed(), -i3, 0.0));
}

TEST_CASE("dot and cross on 3-vectors") {
    Vector3 ex{1, 0, 0}, ey{0, 1, 0};
    CHECK(dot(ex, ey) == 0.0);
    CHECK(dot(ex, ex) == 1.0);
    Vector3 c = cross(ex, ey);
    CHECK(c.x == 0.0);
    CHECK(c.y == 0.0);
    CHECK(c.z == 1.0);

    // dot(a, b) = cos(angle) for unit vectors
    double theta = 0.73;
    Vector3 b{std::cos(theta), std::sin(theta), 0.0};
    CHECK(std::fabs(dot(ex, b) - std::cos(theta)) <= 1e-12);

    // cross is antisymmetric and orthogonal to both factors
    TrialRng rng(20, 0);
    for (int n = 0; n < 200; ++n) {
        Vector3 a = rng.next_unit_vector();
        Vector3 v = rng.next_unit_vector();
        Vector3 axv = cross(a, v);
        CHECK(std::fabs(dot(axv, a)) <= 1e-12);
        CHECK(std::fabs(dot(axv, v)) <= 1e-12);
        Vector3 vxa = cross(v, a);
        CHECK(std::fabs(axv.x + vxa.x) <= 1e-15);
        CHECK(std::fabs(axv.y + vxa.y) <= 1e-15);
        CHECK(std::fabs(axv.z + vxa.z) <= 1e-15);
    }
}

TEST_CASE("fundamental identity ab = a.b + a^b for vectors") {
    TrialRng rng(21, 0);
    for (int n = 0; n < 500; ++n) {
        Vector3 a = rng.next_unit_vector();
        Vector3 b = rng.next_unit_vector();
        Multivector lhs = a.embed() * b.embed();
        Multivector rhs = Multivector::scalar(dot(a, b)) + wedge(a.embed(), b.embed());
        CHECK(max_coeff_distance(lhs, rhs) <= 1e-12);
    }
}

TEST_CASE("wedge product basics") {
    Multivector e1 = basis_blade(kE1);
    Multivector e2 = basis_blade(kE2);
    Multivector e3 = basis_blade(kE3);
    CHECK(approx_equal(wedge(e1, e2), basis_blade(kE12), 0.0));
    CHECK(approx_equal(wedge(e2, e1), -basis_blade(kE12), 0.0));
    CHECK(approx_equal(wedge(e1, wedge(e2, e3)), unit_pseudoscalar(), 0.0));

    TrialRng rng(22, 0);
    for (int n = 0; n < 200; ++n) {
        Vector3 a = rng.next_unit_vector();
        // a ^ a vanishes exactly, not merely to rounding
        Multivector self = wedge(a.embed(), a.embed());
        for (int k = 0; k < 8; ++k) CHECK(self.c[k] == 0.0);

        Vector3 b = rng.next_unit_vector();
        CHECK(max_coeff_distance(wedge(a.embed(), b.embed()),
                                 -wedge(b.embed(), a.embed())) <= 1e-15);
    }

    // scalars act by scaling
    Multivector u = random_mv(rng);
    CHECK(max_coeff_distance(wedge(Multivector::scalar(2.5), u), u * 2.5) <= 1e-15);
}

TEST_CASE("wedge of vectors is the dual of the cross product") {
    TrialRng rng(23, 0);
    for (int n = 0; n < 500; ++n) {
        Vector3 a = rng.next_unit_vector();
        Vector3 b = rng.next_unit_vector();
        Multivector lhs = wedge(a.embed(), b.embed());
        Multivector rhs = hodge_dual(cross(a, b).embed());
        CHECK(max_coeff_distance(lhs, rhs) <= 1e-12);
    }
}

TEST_CASE("grade projection") {
    TrialRng rng(24, 0);
    Multivector u = random_mv(rng);

    Multivector sum;
    for (int k = 0; k <= 3; ++k) {
        Multivector part = grade_project(u, k);
        sum += part;
        CHECK(approx_equal(grade_project(part, k), part, 0.0));
        for (int j = 0; j <= 3; ++j) {
            if (j == k) continue;
            CHECK(approx_equal(grade_project(part, j), Multivector{}, 0.0));
        }
    }
    CHECK(approx_equal(sum, u, 0.0));

    CHECK(grade_project(u, 2).c[kE12] == u.c[kE12]);
    CHECK(grade_project(u, 2).c[kE1] == 0.0);

    CHECK_THROWS_AS(grade_project(u, 4), UsageError);
    CHECK_THROWS_AS(grade_project(u, -1), UsageError);
}

TEST_CASE("reversion") {
    CHECK(approx_equal(reverse(basis_blade(kE1)), basis_blade(kE1), 0.0));
    CHECK(approx_equal(reverse(basis_blade(kE12)), -basis_blade(kE12), 0.0));
    CHECK(approx_equal(reverse(unit_pseudoscalar()), -unit_pseudoscalar(), 0.0));

    TrialRng rng(25, 0);
    for (int n = 0; n < 500; ++n) {
        Multivector u = random_mv(rng);
        Multivector v = random_mv(rng);
        CHECK(approx_equal(reverse(reverse(u)), u, 0.0));
        // anti-automorphism: (uv)~ = v~ u~
        CHECK(max_coeff_distance(reverse(u * v), reverse(v) * reverse(u)) <= 1e-12);
    }
}

TEST_CASE("hodge dual") {
    CHECK(approx_equal(hodge_dual(basis_blade(kE1)), basis_blade(kE23), 0.0));
    CHECK(approx_equal(hodge_dual(basis_blade(kE2)), basis_blade(kE31), 0.0));
    CHECK(approx_equal(hodge_dual(basis_blade(kE3)), basis_blade(kE12), 0.0));
    CHECK(approx_equal(hodge_dual(basis_blade(kE12)), -basis_blade(kE3), 0.0));

    TrialRng rng(26, 0);
    for (int n = 0; n < 200; ++n) {
        Multivector u = random_mv(rng);
        CHECK(max_coeff_distance(hodge_dual(hodge_dual(u)), -u) <= 1e-12);
    }
}

TEST_CASE("axis reflection") {
    CHECK(approx_equal(reflect_axis(basis_blade(kE2), 2), -basis_blade(kE2), 0.0));
    CHECK(approx_equal(reflect_axis(basis_blade(kE1), 2), basis_blade(kE1), 0.0));
    CHECK(approx_equal(reflect_axis(basis_blade(kE12), 2), -basis_blade(kE12), 0.0));
    CHECK(approx_equal(reflect_axis(basis_blade(kE31), 2), basis_blade(kE31), 0.0));
    CHECK(approx_equal(reflect_axis(unit_pseudoscalar(), 2), -unit_pseudoscalar(), 0.0));

    TrialRng rng(27, 0);
    Multivector u = random_mv(rng);
    CHECK_THROWS_AS(reflect_axis(u, 0), UsageError);
    CHECK_THROWS_AS(reflect_axis(u, 4), UsageError);

    // each mirror is an algebra automorphism
    for (int axis = 1; axis <= 3; ++axis) {
        for (int n = 0; n < 200; ++n) {
            Multivector a = random_mv(rng);
            Multivector b = random_mv(rng);
            CHECK(max_coeff_distance(reflect_axis(a * b, axis),
                                     reflect_axis(a, axis) * reflect_axis(b, axis)) <= 1e-12);
        }
    }

    // reflecting all three axes negates vectors and the pseudoscalar
    Multivector v = Vector3{0.3, -0.4, 0.5}.embed();
    Multivector r = reflect_axis(reflect_axis(reflect_axis(v, 1), 2), 3);
    CHECK(approx_equal(r, -v, 0.0));
}

TEST_CASE("Vector3 embedding and normalization") {
    Vector3 a = Vector3::unit(3.0, 0.0, 4.0);
    CHECK(std::fabs(a.norm() - 1.0) <= 1e-15);
    CHECK(std::fabs(a.x - 0.6) <= 1e-15);
    CHECK(std::fabs(a.z - 0.8) <= 1e-15);
    CHECK_THROWS_AS(Vector3::unit(0.0, 0.0, 0.0), DomainError);

    Vector3 b{0.1, -0.2, 0.3};
    Vector3 back = vector_grade(b.embed());
    CHECK(back.x == b.x);
    CHECK(back.y == b.y);
    CHECK(back.z == b.z);
    CHECK(grade_project(b.embed(), 1).c[kE2] == -0.2);
}

TEST_CASE("debug text form") {
    Multivector u;
    u.c[kScalar] = 1.5;
    u.c[kE12] = -2.0;
    CHECK(to_string(u) == "1.5 + 0 e1 + 0 e2 + 0 e3 + 0 e23 + 0 e31 + -2 e12 + 0 e123");

    Multivector v;
    v.c[kE1] = 1.0 / 3.0;
    CHECK(to_string(v) ==
          "0 + 0.333333333333 e1 + 0 e2 + 0 e3 + 0 e23 + 0 e31 + 0 e12 + 0 e123");
}
