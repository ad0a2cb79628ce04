#include "subalgebra.hpp"

#include <cmath>

#include "errors.hpp"

namespace bb {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void require_same_flavor(const EvenElement& x, const EvenElement& y, const char* op) {
    if (x.flavor != y.flavor)
        throw MixedRepresentationError(std::string(op) +
                                       ": left- and right-flavored elements cannot be combined");
}

double bivector_sign(Flavor f) { return f == Flavor::Right ? 1.0 : -1.0; }

} // namespace

EvenElement EvenElement::scalar(Flavor f, double value) {
    EvenElement x;
    x.flavor = f;
    x.c[0] = value;
    return x;
}

EvenElement EvenElement::basis(Flavor f, int i) {
    if (i < 0 || i > 3) throw UsageError("EvenElement::basis: index must be in [0, 3]");
    EvenElement x;
    x.flavor = f;
    x.c[i] = 1.0;
    return x;
}

Multivector EvenElement::embed() const {
    double s = bivector_sign(flavor);
    Multivector u = Multivector::scalar(c[0]);
    u.c[kE23] = s * c[1];
    u.c[kE31] = s * c[2];
    u.c[kE12] = s * c[3];
    return u;
}

double EvenElement::norm() const {
    return std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]);
}

EvenElement operator+(const EvenElement& x, const EvenElement& y) {
    require_same_flavor(x, y, "operator+");
    EvenElement out = x;
    for (int i = 0; i < 4; ++i) out.c[i] += y.c[i];
    return out;
}

EvenElement operator*(const EvenElement& x, double s) {
    EvenElement out = x;
    for (int i = 0; i < 4; ++i) out.c[i] *= s;
    return out;
}

EvenElement even_product(const EvenElement& x, const EvenElement& y) {
    require_same_flavor(x, y, "even_product");
    // B_i B_j = -delta_ij - eps_ijk B_k (right), -delta_ij + eps_ijk B_k (left)
    double s = -bivector_sign(x.flavor);
    EvenElement out;
    out.flavor = x.flavor;
    out.c[0] = x.c[0] * y.c[0] - x.c[1] * y.c[1] - x.c[2] * y.c[2] - x.c[3] * y.c[3];
    out.c[1] = x.c[0] * y.c[1] + x.c[1] * y.c[0] + s * (x.c[2] * y.c[3] - x.c[3] * y.c[2]);
    out.c[2] = x.c[0] * y.c[2] + x.c[2] * y.c[0] + s * (x.c[3] * y.c[1] - x.c[1] * y.c[3]);
    out.c[3] = x.c[0] * y.c[3] + x.c[3] * y.c[0] + s * (x.c[1] * y.c[2] - x.c[2] * y.c[1]);
    return out;
}

EvenElement adjoint(const EvenElement& x) {
    EvenElement out = x;
    out.flavor = x.flavor == Flavor::Right ? Flavor::Left : Flavor::Right;
    return out;
}

double triple_product(Flavor f) {
    EvenElement p = even_product(even_product(EvenElement::basis(f, 1), EvenElement::basis(f, 2)),
                                 EvenElement::basis(f, 3));
    return p.c[0];
}

ComplexMatrix2 ComplexMatrix2::identity() {
    ComplexMatrix2 m;
    m.m[0] = 1.0;
    m.m[3] = 1.0;
    return m;
}

ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    ComplexMatrix2 out;
    out.m[0] = a.m[0] * b.m[0] + a.m[1] * b.m[2];
    out.m[1] = a.m[0] * b.m[1] + a.m[1] * b.m[3];
    out.m[2] = a.m[2] * b.m[0] + a.m[3] * b.m[2];
    out.m[3] = a.m[2] * b.m[1] + a.m[3] * b.m[3];
    return out;
}

ComplexMatrix2 operator+(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    ComplexMatrix2 out;
    for (int i = 0; i < 4; ++i) out.m[i] = a.m[i] + b.m[i];
    return out;
}

ComplexMatrix2 operator*(const ComplexMatrix2& a, std::complex<double> s) {
    ComplexMatrix2 out;
    for (int i = 0; i < 4; ++i) out.m[i] = a.m[i] * s;
    return out;
}

ComplexMatrix2 conjugate_transpose(const ComplexMatrix2& a) {
    ComplexMatrix2 out;
    out.m[0] = std::conj(a.m[0]);
    out.m[1] = std::conj(a.m[2]);
    out.m[2] = std::conj(a.m[1]);
    out.m[3] = std::conj(a.m[3]);
    return out;
}

double max_entry_distance(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a.m[i] - b.m[i]));
    return worst;
}

ComplexMatrix2 to_matrix(const EvenElement& x) {
    // Bivector images: left flavor maps B1, B2, B3 to i*sigma3, -i*sigma2,
    // -i*sigma1; the right flavor images are their negatives.
    ComplexMatrix2 b1, b2, b3;
    b1.m = {kI, 0.0, 0.0, -kI};
    b2.m = {0.0, -1.0, 1.0, 0.0};
    b3.m = {0.0, -kI, -kI, 0.0};
    double s = x.flavor == Flavor::Left ? 1.0 : -1.0;
    return ComplexMatrix2::identity() * x.c[0] + b1 * (s * x.c[1]) + b2 * (s * x.c[2]) +
           b3 * (s * x.c[3]);
}

Ket2 ket_of(const EvenElement& x) {
    if (x.flavor != Flavor::Left)
        throw MixedRepresentationError("ket_of: kets represent left-flavored elements");
    // |1> = (1,0), |B1> = (i,0), |B2> = (0,1), |B3> = (0,-i)
    return {x.c[0] + kI * x.c[1], x.c[2] - kI * x.c[3]};
}

Bra2 bra_of(const EvenElement& x) {
    if (x.flavor != Flavor::Right)
        throw MixedRepresentationError("bra_of: bras represent right-flavored elements");
    // <1| = (1,0), <B1| = (-i,0), <B2| = (0,1), <B3| = (0,i)
    return {x.c[0] - kI * x.c[1], x.c[2] + kI * x.c[3]};
}

Bra2 adjoint(const Ket2& k) { return {std::conj(k.a), std::conj(k.b)}; }

Ket2 adjoint(const Bra2& b) { return {std::conj(b.a), std::conj(b.b)}; }

Ket2 operator*(const ComplexMatrix2& m, const Ket2& k) {
    return {m.m[0] * k.a + m.m[1] * k.b, m.m[2] * k.a + m.m[3] * k.b};
}

Bra2 operator*(const Bra2& b, const ComplexMatrix2& m) {
    return {b.a * m.m[0] + b.b * m.m[2], b.a * m.m[1] + b.b * m.m[3]};
}

HandedBasisClass handed_basis(Flavor algebra, Handedness handedness) {
    HandedBasisClass cls;
    cls.algebra = algebra;
    cls.handedness = handedness;
    // products of the right-handed frame: 1, e2e3, e3e1, e1e2
    cls.basis = {Multivector::scalar(1.0), Multivector::blade(kE23), Multivector::blade(kE31),
                 Multivector::blade(kE12)};
    if (algebra == Flavor::Left)
        for (auto& b : cls.basis) b = reverse(b);
    if (handedness == Handedness::Left)
        for (auto& b : cls.basis) b = reflect_axis(b, 2);
    return cls;
}

double basis_triple_product(const HandedBasisClass& cls) {
    return (cls.basis[1] * cls.basis[2] * cls.basis[3]).scalar_part();
}

namespace {

// 2x2 real matrix acting on (re, im) pairs, row-major.
struct RealMatrix2 {
    std::array<double, 4> m{};
};

RealMatrix2 real_mul(const RealMatrix2& a, const RealMatrix2& b) {
    return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
             a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
}

RealMatrix2 left_action(ComplexPair z) { return {{z.re, -z.im, z.im, z.re}}; }
RealMatrix2 right_action(ComplexPair z) { return {{z.re, z.im, -z.im, z.re}}; }

ComplexPair column_apply(const RealMatrix2& a, ComplexPair k) {
    return {a.m[0] * k.re + a.m[1] * k.im, a.m[2] * k.re + a.m[3] * k.im};
}

ComplexPair row_apply(ComplexPair b, const RealMatrix2& a) {
    return {b.re * a.m[0] + b.im * a.m[2], b.re * a.m[1] + b.im * a.m[3]};
}

ComplexPair pair_mul(ComplexPair p, ComplexPair q) {
    return {p.re * q.re - p.im * q.im, p.re * q.im + p.im * q.re};
}

double pair_distance(ComplexPair p, ComplexPair q) {
    return std::max(std::fabs(p.re - q.re), std::fabs(p.im - q.im));
}

} // namespace

ComplexRepReport complex_rep_demo(ComplexPair z1, ComplexPair z2) {
    ComplexRepReport rep;

    std::complex<double> ref = std::complex<double>(z1.re, z1.im) *
                               std::complex<double>(z2.re, z2.im);
    rep.reference = {ref.real(), ref.imag()};

    auto span = [](Flavor f, ComplexPair z) {
        EvenElement x = EvenElement::scalar(f, z.re);
        x.c[3] = z.im;
        return x;
    };
    EvenElement pr = even_product(span(Flavor::Right, z1), span(Flavor::Right, z2));
    rep.via_right_subalgebra = {pr.c[0], pr.c[3]};
    EvenElement pl = even_product(span(Flavor::Left, z1), span(Flavor::Left, z2));
    rep.via_left_subalgebra = {pl.c[0], pl.c[3]};

    RealMatrix2 lm = real_mul(left_action(z1), left_action(z2));
    rep.via_left_matrices = {lm.m[0], lm.m[2]};
    RealMatrix2 rm = real_mul(right_action(z1), right_action(z2));
    rep.via_right_matrices = {rm.m[0], rm.m[1]};

    rep.max_deviation = 0.0;
    for (const ComplexPair& route : {rep.via_right_subalgebra, rep.via_left_subalgebra,
                                     rep.via_left_matrices, rep.via_right_matrices})
        rep.max_deviation = std::max(rep.max_deviation, pair_distance(route, rep.reference));

    RealMatrix2 lt = left_action(z1);
    RealMatrix2 rt = right_action(z1);
    rep.transpose_pairs_representations =
        lt.m[0] == rt.m[0] && lt.m[1] == rt.m[2] && lt.m[2] == rt.m[1] && lt.m[3] == rt.m[3];

    // three-element chains: matrices applied in sequence against the
    // one-shot product, on both the column and the row action
    ComplexPair triple = pair_mul(z1, pair_mul(z2, z1));
    ComplexPair col_chain = column_apply(left_action(z1), column_apply(left_action(z2), z1));
    ComplexPair row_chain = row_apply(row_apply(z1, right_action(z2)), right_action(z1));
    ComplexPair assoc = column_apply(real_mul(left_action(z1), left_action(z2)), z1);
    rep.chains_associate = pair_distance(col_chain, triple) <= 1e-12 &&
                           pair_distance(row_chain, triple) <= 1e-12 &&
                           pair_distance(assoc, triple) <= 1e-12;
    return rep;
}

} // namespace bb
