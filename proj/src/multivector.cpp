#include "multivector.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "errors.hpp"

namespace bb {

Multivector Multivector::scalar(double value) {
    Multivector u;
    u.c[kScalar] = value;
    return u;
}

Multivector Multivector::blade(Blade b, double coefficient) {
    Multivector u;
    u.c[static_cast<int>(b)] = coefficient;
    return u;
}

double Multivector::norm() const {
    double sum = 0.0;
    for (double x : c) sum += x * x;
    return std::sqrt(sum);
}

Multivector operator+(const Multivector& u, const Multivector& v) {
    Multivector out;
    for (int i = 0; i < 8; ++i) out.c[i] = u.c[i] + v.c[i];
    return out;
}

Multivector operator-(const Multivector& u, const Multivector& v) {
    Multivector out;
    for (int i = 0; i < 8; ++i) out.c[i] = u.c[i] - v.c[i];
    return out;
}

Multivector operator-(const Multivector& u) {
    Multivector out;
    for (int i = 0; i < 8; ++i) out.c[i] = -u.c[i];
    return out;
}

Multivector operator*(const Multivector& u, double s) {
    Multivector out;
    for (int i = 0; i < 8; ++i) out.c[i] = u.c[i] * s;
    return out;
}

Multivector operator*(double s, const Multivector& u) { return u * s; }

Multivector& operator+=(Multivector& u, const Multivector& v) {
    for (int i = 0; i < 8; ++i) u.c[i] += v.c[i];
    return u;
}

Multivector geometric_product(const Multivector& u, const Multivector& v) {
    Multivector out;
    for (int i = 0; i < 8; ++i) {
        if (u.c[i] == 0.0) continue;
        for (int j = 0; j < 8; ++j) {
            const auto& term = detail::kProductTable[i][j];
            out.c[term.blade] += term.sign * u.c[i] * v.c[j];
        }
    }
    return out;
}

Multivector operator*(const Multivector& u, const Multivector& v) {
    return geometric_product(u, v);
}

double max_coeff_distance(const Multivector& u, const Multivector& v) {
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) worst = std::max(worst, std::fabs(u.c[i] - v.c[i]));
    return worst;
}

bool approx_equal(const Multivector& u, const Multivector& v, double tol) {
    return max_coeff_distance(u, v) <= tol;
}

Multivector grade_project(const Multivector& u, int k) {
    if (k < 0 || k > 3) throw UsageError("grade_project: grade must be in [0, 3]");
    Multivector out;
    for (int i = 0; i < 8; ++i)
        if (kGradeOf[i] == k) out.c[i] = u.c[i];
    return out;
}

Multivector reverse(const Multivector& u) {
    // Reversing a grade-k blade costs (-1)^(k(k-1)/2): grades 0,1 keep
    // their sign, grades 2,3 flip.
    Multivector out = u;
    for (int i = 0; i < 8; ++i)
        if (kGradeOf[i] >= 2) out.c[i] = -out.c[i];
    return out;
}

Multivector hodge_dual(const Multivector& u) {
    return unit_pseudoscalar() * u;
}

Multivector wedge(const Multivector& u, const Multivector& v) {
    Multivector out;
    for (int r = 0; r <= 3; ++r) {
        Multivector ur = grade_project(u, r);
        for (int s = 0; r + s <= 3; ++s) {
            Multivector vs = grade_project(v, s);
            out += grade_project(ur * vs, r + s);
        }
    }
    return out;
}

Multivector reflect_axis(const Multivector& u, int axis) {
    if (axis < 1 || axis > 3) throw UsageError("reflect_axis: axis must be 1, 2 or 3");
    Multivector out = u;
    for (int i = 0; i < 8; ++i) {
        for (int k = 0; k < detail::kBladeLetterCount[i]; ++k)
            if (detail::kBladeLetters[i][k] == axis) out.c[i] = -out.c[i];
    }
    return out;
}

Multivector unit_pseudoscalar() { return Multivector::blade(kE123); }

Multivector Pseudoscalar::embed() const {
    return Multivector::blade(kE123, static_cast<double>(sign));
}

Vector3 Vector3::unit(double x, double y, double z) {
    return Vector3{x, y, z}.normalized();
}

Multivector Vector3::embed() const {
    Multivector u;
    u.c[kE1] = x;
    u.c[kE2] = y;
    u.c[kE3] = z;
    return u;
}

double Vector3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Vector3 Vector3::normalized() const {
    double n = norm();
    if (n == 0.0) throw DomainError("Vector3: cannot normalize a zero vector");
    return {x / n, y / n, z / n};
}

bool Vector3::is_unit(double tol) const { return std::fabs(norm() - 1.0) <= tol; }

Vector3 operator+(const Vector3& a, const Vector3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vector3 operator-(const Vector3& a, const Vector3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vector3 operator-(const Vector3& a) { return {-a.x, -a.y, -a.z}; }
Vector3 operator*(const Vector3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }
Vector3 operator*(double s, const Vector3& a) { return a * s; }

double dot(const Vector3& a, const Vector3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vector3 cross(const Vector3& a, const Vector3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Vector3 vector_grade(const Multivector& u) { return {u.c[kE1], u.c[kE2], u.c[kE3]}; }

std::string format_double(double value, int significant_digits) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                   std::chars_format::general, significant_digits);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, end);
}

std::string format_double_shortest(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, end);
}

std::string to_string(const Multivector& u) {
    std::string out;
    for (int i = 0; i < 8; ++i) {
        if (i > 0) out += " + ";
        out += format_double(u.c[i], 12);
        if (i > 0) {
            out += ' ';
            out += kBladeName[i];
        }
    }
    return out;
}

} // namespace bb
