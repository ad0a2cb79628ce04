#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>

#include "errors.hpp"
#include "rng.hpp"
#include "subalgebra.hpp"

using namespace bb;

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

EvenElement random_even(TrialRng& rng, Flavor f) {
    EvenElement x;
    x.flavor = f;
    for (int i = 0; i < 4; ++i) x.c[i] = 2.0 * rng.next_unit() - 1.0;
    return x;
}

ComplexMatrix2 matrix(std::complex<double> m00, std::complex<double> m01,
                      std::complex<double> m10, std::complex<double> m11) {
    ComplexMatrix2 a;
    a.m = {m00, m01, m10, m11};
    return a;
}

} // namespace

TEST_CASE("basis elements embed onto the bivector blades") {
    CHECK(max_coeff_distance(EvenElement::basis(Flavor::Right, 0).embed(),
                             Multivector::scalar(1.0)) == 0.0);
    CHECK(max_coeff_distance(EvenElement::basis(Flavor::Right, 1).embed(),
                             Multivector::blade(kE23)) == 0.0);
    CHECK(max_coeff_distance(EvenElement::basis(Flavor::Right, 2).embed(),
                             Multivector::blade(kE31)) == 0.0);
    CHECK(max_coeff_distance(EvenElement::basis(Flavor::Right, 3).embed(),
                             Multivector::blade(kE12)) == 0.0);
    for (int i = 1; i <= 3; ++i)
        CHECK(max_coeff_distance(EvenElement::basis(Flavor::Left, i).embed(),
                                 -EvenElement::basis(Flavor::Right, i).embed()) == 0.0);
    CHECK_THROWS_AS(EvenElement::basis(Flavor::Right, 4), UsageError);
    CHECK_THROWS_AS(EvenElement::basis(Flavor::Left, -1), UsageError);
}

TEST_CASE("structure constants against the hand-written table") {
    struct Entry {
        int i, j, k;
        double sign; // right flavor: B_i B_j = sign * B_k (i != j)
    };
    // right flavor carries the minus of the epsilon term, left the plus
    constexpr Entry table[] = {
        {1, 2, 3, -1.0}, {2, 3, 1, -1.0}, {3, 1, 2, -1.0},
        {2, 1, 3, +1.0}, {3, 2, 1, +1.0}, {1, 3, 2, +1.0},
    };
    for (Flavor f : {Flavor::Right, Flavor::Left}) {
        double flip = f == Flavor::Right ? 1.0 : -1.0;
        for (const Entry& e : table) {
            EvenElement p =
                even_product(EvenElement::basis(f, e.i), EvenElement::basis(f, e.j));
            CHECK(p.flavor == f);
            CHECK(p.c[0] == 0.0);
            CHECK(p.c[e.k] == e.sign * flip);
            CHECK(p.c[e.i == e.k ? e.j : e.i] == 0.0);
        }
        for (int i = 1; i <= 3; ++i) {
            EvenElement sq = even_product(EvenElement::basis(f, i), EvenElement::basis(f, i));
            CHECK(sq.c[0] == -1.0);
            CHECK(sq.c[1] == 0.0);
            CHECK(sq.c[2] == 0.0);
            CHECK(sq.c[3] == 0.0);
        }
    }
}

TEST_CASE("even product agrees with the geometric product of embeddings") {
    TrialRng rng(3, 0);
    for (int n = 0; n < 300; ++n)
        for (Flavor f : {Flavor::Right, Flavor::Left}) {
            EvenElement x = random_even(rng, f);
            EvenElement y = random_even(rng, f);
            CHECK(max_coeff_distance(even_product(x, y).embed(), x.embed() * y.embed()) <=
                  1e-12);
        }
}

TEST_CASE("triple product separates the flavors") {
    CHECK(triple_product(Flavor::Right) == 1.0);
    CHECK(triple_product(Flavor::Left) == -1.0);
}

TEST_CASE("adjoint flips the flavor and matches reversion") {
    TrialRng rng(3, 1);
    for (int n = 0; n < 200; ++n)
        for (Flavor f : {Flavor::Right, Flavor::Left}) {
            EvenElement x = random_even(rng, f);
            EvenElement a = adjoint(x);
            CHECK(a.flavor != x.flavor);
            CHECK(max_coeff_distance(a.embed(), reverse(x.embed())) == 0.0);
            for (int i = 0; i < 4; ++i) CHECK(a.c[i] == x.c[i]);
        }
}

TEST_CASE("cross-flavor arithmetic throws for every basis pair") {
    int rejected = 0;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
            EvenElement l = EvenElement::basis(Flavor::Left, i);
            EvenElement r = EvenElement::basis(Flavor::Right, j);
            CHECK_THROWS_AS(even_product(l, r), MixedRepresentationError);
            CHECK_THROWS_AS(even_product(r, l), MixedRepresentationError);
            CHECK_THROWS_AS((void)(l + r), MixedRepresentationError);
            rejected += 3;
        }
    CHECK(rejected == 48);
    CHECK_NOTHROW(even_product(EvenElement::basis(Flavor::Left, 1),
                               EvenElement::basis(Flavor::Left, 2)));
}

TEST_CASE("golden 2x2 matrices") {
    CHECK(max_entry_distance(to_matrix(EvenElement::scalar(Flavor::Left, 1.0)),
                             ComplexMatrix2::identity()) == 0.0);
    CHECK(max_entry_distance(to_matrix(EvenElement::basis(Flavor::Left, 1)),
                             matrix(kI, 0.0, 0.0, -kI)) == 0.0);
    CHECK(max_entry_distance(to_matrix(EvenElement::basis(Flavor::Left, 2)),
                             matrix(0.0, -1.0, 1.0, 0.0)) == 0.0);
    CHECK(max_entry_distance(to_matrix(EvenElement::basis(Flavor::Left, 3)),
                             matrix(0.0, -kI, -kI, 0.0)) == 0.0);
    for (int i = 1; i <= 3; ++i)
        CHECK(max_entry_distance(to_matrix(EvenElement::basis(Flavor::Right, i)),
                                 to_matrix(EvenElement::basis(Flavor::Left, i)) *
                                     std::complex<double>(-1.0)) == 0.0);
}

TEST_CASE("matrix representation is a homomorphism with adjoint = dagger") {
    TrialRng rng(3, 2);
    for (int n = 0; n < 500; ++n)
        for (Flavor f : {Flavor::Right, Flavor::Left}) {
            EvenElement x = random_even(rng, f);
            EvenElement y = random_even(rng, f);
            CHECK(max_entry_distance(to_matrix(even_product(x, y)),
                                     to_matrix(x) * to_matrix(y)) <= 1e-12);
            CHECK(max_entry_distance(to_matrix(adjoint(x)),
                                     conjugate_transpose(to_matrix(x))) == 0.0);
        }
}

TEST_CASE("unit-norm elements give unitary matrices") {
    TrialRng rng(3, 3);
    for (int n = 0; n < 200; ++n)
        for (Flavor f : {Flavor::Right, Flavor::Left}) {
            EvenElement x = random_even(rng, f);
            if (x.norm() < 1e-3) continue;
            x = x * (1.0 / x.norm());
            ComplexMatrix2 u = to_matrix(x);
            CHECK(max_entry_distance(u * conjugate_transpose(u),
                                     ComplexMatrix2::identity()) <= 1e-12);
            CHECK(max_entry_distance(conjugate_transpose(u) * u,
                                     ComplexMatrix2::identity()) <= 1e-12);
        }
}

TEST_CASE("golden kets and bras") {
    Ket2 unit = ket_of(EvenElement::basis(Flavor::Left, 0));
    CHECK(unit.a == std::complex<double>(1.0));
    CHECK(unit.b == std::complex<double>(0.0));
    Ket2 k1 = ket_of(EvenElement::basis(Flavor::Left, 1));
    CHECK(k1.a == kI);
    CHECK(k1.b == std::complex<double>(0.0));
    Ket2 k2 = ket_of(EvenElement::basis(Flavor::Left, 2));
    CHECK(k2.a == std::complex<double>(0.0));
    CHECK(k2.b == std::complex<double>(1.0));
    Ket2 k3 = ket_of(EvenElement::basis(Flavor::Left, 3));
    CHECK(k3.a == std::complex<double>(0.0));
    CHECK(k3.b == -kI);

    // adjoint of each left ket is the bra of the matching right element
    for (int i = 0; i <= 3; ++i) {
        Bra2 expected = bra_of(EvenElement::basis(Flavor::Right, i));
        Bra2 actual = adjoint(ket_of(EvenElement::basis(Flavor::Left, i)));
        CHECK(actual.a == expected.a);
        CHECK(actual.b == expected.b);
    }

    CHECK_THROWS_AS(ket_of(EvenElement::basis(Flavor::Right, 1)), MixedRepresentationError);
    CHECK_THROWS_AS(bra_of(EvenElement::basis(Flavor::Left, 1)), MixedRepresentationError);
}

TEST_CASE("matrix action tracks the subalgebra product on kets and bras") {
    TrialRng rng(3, 4);
    for (int n = 0; n < 200; ++n) {
        EvenElement x = random_even(rng, Flavor::Left);
        EvenElement y = random_even(rng, Flavor::Left);
        Ket2 lhs = to_matrix(x) * ket_of(y);
        Ket2 rhs = ket_of(even_product(x, y));
        CHECK(std::abs(lhs.a - rhs.a) <= 1e-12);
        CHECK(std::abs(lhs.b - rhs.b) <= 1e-12);

        EvenElement xr = x, yr = y;
        xr.flavor = Flavor::Right;
        yr.flavor = Flavor::Right;
        Bra2 blhs = bra_of(xr) * to_matrix(yr);
        Bra2 brhs = bra_of(even_product(xr, yr));
        CHECK(std::abs(blhs.a - brhs.a) <= 1e-12);
        CHECK(std::abs(blhs.b - brhs.b) <= 1e-12);
    }
}

TEST_CASE("four handed basis classes") {
    auto check_class = [](Flavor f, Handedness h, double s1, double s2, double s3) {
        HandedBasisClass cls = handed_basis(f, h);
        CHECK(cls.algebra == f);
        CHECK(cls.handedness == h);
        CHECK(max_coeff_distance(cls.basis[0], Multivector::scalar(1.0)) == 0.0);
        CHECK(max_coeff_distance(cls.basis[1], Multivector::blade(kE23, s1)) == 0.0);
        CHECK(max_coeff_distance(cls.basis[2], Multivector::blade(kE31, s2)) == 0.0);
        CHECK(max_coeff_distance(cls.basis[3], Multivector::blade(kE12, s3)) == 0.0);
    };
    check_class(Flavor::Right, Handedness::Right, 1, 1, 1);
    check_class(Flavor::Right, Handedness::Left, -1, 1, -1);
    check_class(Flavor::Left, Handedness::Right, -1, -1, -1);
    check_class(Flavor::Left, Handedness::Left, 1, -1, 1);
}

TEST_CASE("triple product of a handed basis tracks the algebra flavor only") {
    CHECK(basis_triple_product(handed_basis(Flavor::Right, Handedness::Right)) == 1.0);
    CHECK(basis_triple_product(handed_basis(Flavor::Right, Handedness::Left)) == 1.0);
    CHECK(basis_triple_product(handed_basis(Flavor::Left, Handedness::Right)) == -1.0);
    CHECK(basis_triple_product(handed_basis(Flavor::Left, Handedness::Left)) == -1.0);
}

TEST_CASE("complex representation demo") {
    // (1 + 2i)(3 - i) = 5 + 5i
    ComplexRepReport rep = complex_rep_demo({1.0, 2.0}, {3.0, -1.0});
    CHECK(rep.reference.re == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(rep.reference.im == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(rep.max_deviation <= 1e-12);
    CHECK(rep.transpose_pairs_representations);
    CHECK(rep.chains_associate);

    TrialRng rng(3, 5);
    for (int n = 0; n < 100; ++n) {
        ComplexPair z1{2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0};
        ComplexPair z2{2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0};
        ComplexRepReport r = complex_rep_demo(z1, z2);
        CHECK(r.max_deviation <= 1e-12);
        CHECK(r.transpose_pairs_representations);
        CHECK(r.chains_associate);
    }
}
