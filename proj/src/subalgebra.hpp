#pragma once

#include <array>
#include <complex>

#include "multivector.hpp"

namespace bb {

// The even subalgebra of Cl(3,0) contains two quaternion-isomorphic copies
// that differ by the sign convention of the bivector basis.  Right uses
// (+e23, +e31, +e12); Left is its reverse (-e23, -e31, -e12).  Elements of
// different flavors must never be combined coefficient-wise: the conversion
// law is B_right = -B_left, not coefficient identity.
enum class Flavor { Left, Right };

enum class Handedness { Left, Right };

// x0 + x1 B1 + x2 B2 + x3 B3 over one flavor's bivector basis.
struct EvenElement {
    Flavor flavor = Flavor::Right;
    std::array<double, 4> c{};

    static EvenElement scalar(Flavor f, double value);
    // i = 0 gives the scalar unit, i = 1..3 the bivector basis elements.
    static EvenElement basis(Flavor f, int i);

    Multivector embed() const;
    double norm() const;
};

// Throws MixedRepresentationError when the flavors differ.
EvenElement operator+(const EvenElement& x, const EvenElement& y);
EvenElement operator*(const EvenElement& x, double s);
EvenElement even_product(const EvenElement& x, const EvenElement& y);

// Reversion in subalgebra terms: keeps coefficients, flips the flavor.
EvenElement adjoint(const EvenElement& x);

// Scalar value of B1 B2 B3 for the given flavor: +1 right, -1 left.
double triple_product(Flavor f);

// 2x2 complex representation.
struct ComplexMatrix2 {
    // row-major: m[0]=m00, m[1]=m01, m[2]=m10, m[3]=m11
    std::array<std::complex<double>, 4> m{};

    static ComplexMatrix2 identity();
};

ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b);
ComplexMatrix2 operator+(const ComplexMatrix2& a, const ComplexMatrix2& b);
ComplexMatrix2 operator*(const ComplexMatrix2& a, std::complex<double> s);
ComplexMatrix2 conjugate_transpose(const ComplexMatrix2& a);
double max_entry_distance(const ComplexMatrix2& a, const ComplexMatrix2& b);

ComplexMatrix2 to_matrix(const EvenElement& x);

// Column/row spinor representations.  Kets carry the left flavor (matrices
// act from the left), bras carry the right flavor (matrices act from the
// right); the conjugate-transpose adjoint maps one listing onto the other.
struct Ket2 {
    std::complex<double> a{};
    std::complex<double> b{};
};

struct Bra2 {
    std::complex<double> a{};
    std::complex<double> b{};
};

Ket2 ket_of(const EvenElement& x);  // requires Flavor::Left
Bra2 bra_of(const EvenElement& x);  // requires Flavor::Right
Bra2 adjoint(const Ket2& k);
Ket2 adjoint(const Bra2& b);
Ket2 operator*(const ComplexMatrix2& m, const Ket2& k);
Bra2 operator*(const Bra2& b, const ComplexMatrix2& m);

// Even basis generated mechanically from a frame: products of the frame
// vectors of a right- or left-handed orthonormal frame, then reversed for
// the left algebra.  The handedness mirror flips the frame's e2.
struct HandedBasisClass {
    Flavor algebra = Flavor::Right;
    Handedness handedness = Handedness::Right;
    std::array<Multivector, 4> basis{};
};

HandedBasisClass handed_basis(Flavor algebra, Handedness handedness);
double basis_triple_product(const HandedBasisClass& cls);

// Demonstration that both subalgebra flavors and both matrix actions
// reproduce ordinary complex arithmetic on the span of {1, B3}.
struct ComplexPair {
    double re = 0.0;
    double im = 0.0;
};

struct ComplexRepReport {
    ComplexPair reference;
    ComplexPair via_right_subalgebra;
    ComplexPair via_left_subalgebra;
    ComplexPair via_left_matrices;
    ComplexPair via_right_matrices;
    double max_deviation = 0.0;
    bool transpose_pairs_representations = false;
    bool chains_associate = false;
};

ComplexRepReport complex_rep_demo(ComplexPair z1, ComplexPair z2);

} // namespace bb
