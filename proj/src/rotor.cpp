#include "rotor.hpp"

#include <cmath>

#include "errors.hpp"

namespace bb {

namespace {

constexpr double kParallelThreshold = 1e-9;
constexpr double kRotorTol = 1e-9;

void require_unit(const Vector3& v, const char* who) {
    if (!v.is_unit()) throw DomainError(std::string(who) + ": direction must be a unit vector");
}

} // namespace

Rotor::Rotor(const Multivector& value) : value_(value) {
    Multivector odd = grade_project(value, 1) + grade_project(value, 3);
    if (odd.norm() > kRotorTol)
        throw DomainError("Rotor: value must contain even grades only");
    Multivector closure = value * reverse(value);
    if (std::fabs(closure.scalar_part() - 1.0) > kRotorTol ||
        (closure - Multivector::scalar(closure.scalar_part())).norm() > kRotorTol)
        throw DomainError("Rotor: value * reverse(value) must equal 1");
}

Rotor Rotor::identity() { return Rotor(); }

Multivector Rotor::bivector_part() const { return grade_project(value_, 2); }

Rotor rotor_from(const Multivector& unit_bivector, double angle) {
    Multivector plane = grade_project(unit_bivector, 2);
    if ((unit_bivector - plane).norm() > kRotorTol)
        throw DomainError("rotor_from: plane must be a pure bivector");
    double n = plane.norm();
    if (std::fabs(n - 1.0) > kRotorTol)
        throw DomainError("rotor_from: plane must have unit norm");
    return Rotor(Multivector::scalar(std::cos(angle)) + plane * (std::sin(angle) / n));
}

Rotor operator*(const Rotor& a, const Rotor& b) { return Rotor(a.value() * b.value()); }

Multivector rotate(const Multivector& g, const Rotor& r) {
    return reverse(r.value()) * g * r.value();
}

Multivector unit_bivector_between(const Vector3& m, const Vector3& n) {
    require_unit(m, "unit_bivector_between");
    require_unit(n, "unit_bivector_between");
    Multivector w = wedge(m.embed(), n.embed());
    double s = w.norm(); // |sin(angle)| for unit inputs
    if (s < kParallelThreshold)
        throw ParallelVectorsError("unit_bivector_between: vectors are numerically parallel");
    return w * (1.0 / s);
}

CoplanarConfig CoplanarConfig::make(double omega, double epsilon, const Vector3& c) {
    if (epsilon < 0.0 || epsilon > 1.0)
        throw DomainError("CoplanarConfig: epsilon must lie in [0, 1]");
    Vector3 normal = c.normalized();

    Vector3 seed{1.0, 0.0, 0.0};
    if (cross(seed, normal).norm() < kParallelThreshold) seed = {0.0, 1.0, 0.0};
    Vector3 p = (seed - normal * dot(seed, normal)).normalized();
    Vector3 q = cross(normal, p);

    auto at = [&](double phi) { return p * std::cos(phi) + q * std::sin(phi); };

    CoplanarConfig cfg;
    cfg.a = at(0.0);
    cfg.a_prime = at(epsilon * omega);
    cfg.b = at(omega);
    cfg.b_prime = at((1.0 + epsilon) * omega);
    cfg.plane_normal = normal;
    cfg.omega = omega;
    cfg.epsilon = epsilon;
    return cfg;
}

CompositionResult composition_decomposition(const CoplanarConfig& cfg) {
    CompositionResult out;
    out.first = Rotor(cfg.a.embed() * cfg.a_prime.embed());
    out.second = Rotor(cfg.a_prime.embed() * cfg.b.embed());
    out.product = out.first * out.second;
    out.direct = Rotor(cfg.a.embed() * cfg.b.embed());
    return out;
}

Multivector parallel_transport_check(const CoplanarConfig& cfg, int mu_sign) {
    Multivector mu = unit_pseudoscalar() * static_cast<double>(mu_sign);
    Multivector g = (unit_pseudoscalar() * cfg.a.embed()) * (mu * cfg.a_prime.embed());
    Rotor r_ab = rotor_from(hodge_dual(cfg.plane_normal.embed()), cfg.omega / 2.0);
    return rotate(g, r_ab);
}

std::optional<Vector3> correct_rotor_axis(const Vector3& a, const Vector3& a_prime,
                                          const Vector3& b, const Vector3& b_prime) {
    Vector3 n1 = cross(a, a_prime);
    Vector3 n2 = cross(b, b_prime);
    if (n1.norm() < kParallelThreshold || n2.norm() < kParallelThreshold)
        throw ParallelVectorsError("correct_rotor_axis: a,a' and b,b' must each span a plane");
    Vector3 axis = cross(n1.normalized(), n2.normalized());
    if (axis.norm() < kParallelThreshold) return std::nullopt;
    return axis.normalized();
}

} // namespace bb
