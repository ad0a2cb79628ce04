#pragma once

#include <optional>

#include "multivector.hpp"

namespace bb {

// Even element R = cos(w) + Bhat sin(w) with R reverse(R) = 1.
//
// Angle convention: rotate() maps G to reverse(R) G R, so a rotor of
// angle w turns vectors in its plane by 2w.  Rotors built directly from
// two unit vectors (their geometric product) carry the full angle
// between the vectors and therefore rotate by twice that angle.
class Rotor {
public:
    Rotor() : value_(Multivector::scalar(1.0)) {}
    // Validates even grade and unit norm (1e-9); throws DomainError.
    explicit Rotor(const Multivector& value);

    static Rotor identity();

    const Multivector& value() const { return value_; }
    double scalar_part() const { return value_.scalar_part(); }
    Multivector bivector_part() const;

private:
    Multivector value_;
};

// cos(angle) + unit_bivector sin(angle); the plane must be grade-2 with
// unit norm within 1e-9 (renormalized exactly before use).
Rotor rotor_from(const Multivector& unit_bivector, double angle);

Rotor operator*(const Rotor& a, const Rotor& b);

// reverse(R) G R
Multivector rotate(const Multivector& g, const Rotor& r);

// (m wedge n) / |sin(angle(m, n))|: the unit bivector of the m,n plane,
// equal to the dual of the unit axis (m x n)/|m x n|.  Near-parallel
// inputs (|m x n| < 1e-9) throw ParallelVectorsError.
Multivector unit_bivector_between(const Vector3& m, const Vector3& n);

// Four coplanar unit directions in the plane orthogonal to c, at angles
// 0, eps*omega, omega, (1+eps)*omega, so that angle(a,a') = angle(b,b').
struct CoplanarConfig {
    Vector3 a, a_prime, b, b_prime;
    Vector3 plane_normal;
    double omega = 0.0;
    double epsilon = 0.0;

    // eps must lie in [0,1]; c must be normalizable.  The in-plane frame
    // is Gram-Schmidt of the lowest-index basis vector not parallel to c.
    static CoplanarConfig make(double omega, double epsilon, const Vector3& c);
};

// R(a,b) = R(a,a') R(a',b) where each factor is the geometric product of
// its two unit vectors.  The composite always carries the full bivector
// term of the direct rotor, for every eps down to and including 0.
struct CompositionResult {
    Rotor first;    // a a'
    Rotor second;   // a' b
    Rotor product;  // (a a')(a' b)
    Rotor direct;   // a b
};

CompositionResult composition_decomposition(const CoplanarConfig& cfg);

// rotate((I a)(mu a'), R) with R the half-angle rotor of the a->b turn.
// The transported element lies in the span of {1, I c}, which commutes
// with R, so the value returns unchanged; at eps = 0 it is the scalar
// -mu_sign.
Multivector parallel_transport_check(const CoplanarConfig& cfg, int mu_sign);

// Normalized (a x a') x (b x b'): the axis of the rotation taking the
// a,a' plane to the b,b' plane.  Returns nullopt (identity rotation)
// when the two plane normals are parallel; throws ParallelVectorsError
// when either pair is itself parallel.
std::optional<Vector3> correct_rotor_axis(const Vector3& a, const Vector3& a_prime,
                                          const Vector3& b, const Vector3& b_prime);

} // namespace bb
