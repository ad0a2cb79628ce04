#pragma once

#include <array>
#include <string>

namespace bb {

// Basis blades of Cl(3,0) in storage order. The bivector e31 (not e13) is
// canonical, so the three bivectors are the duals of e1, e2, e3 in order.
enum Blade : int {
    kScalar = 0,
    kE1 = 1,
    kE2 = 2,
    kE3 = 3,
    kE23 = 4,
    kE31 = 5,
    kE12 = 6,
    kE123 = 7,
};

inline constexpr std::array<int, 8> kGradeOf = {0, 1, 1, 1, 2, 2, 2, 3};

inline constexpr std::array<const char*, 8> kBladeName = {
    "1", "e1", "e2", "e3", "e23", "e31", "e12", "e123"};

namespace detail {

struct BladeTerm {
    int blade;
    double sign;
};

// Letters (axis indices) of each blade in its canonical spelling.
inline constexpr std::array<std::array<int, 3>, 8> kBladeLetters = {{
    {0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0},
    {2, 3, 0}, {3, 1, 0}, {1, 2, 0}, {1, 2, 3},
}};
inline constexpr std::array<int, 8> kBladeLetterCount = {0, 1, 1, 1, 2, 2, 2, 3};

// Product of two basis blades from the two defining rules alone:
// e_i e_i = 1 and e_i e_j = -e_j e_i for i != j.  The concatenated
// letter word is bubble-sorted (each adjacent transposition flips the
// sign), equal neighbours cancel, and the surviving ascending word is
// matched back to a canonical blade spelling.
constexpr BladeTerm blade_product(int lhs, int rhs) {
    int word[6] = {};
    int n = 0;
    for (int k = 0; k < kBladeLetterCount[lhs]; ++k) word[n++] = kBladeLetters[lhs][k];
    for (int k = 0; k < kBladeLetterCount[rhs]; ++k) word[n++] = kBladeLetters[rhs][k];

    double sign = 1.0;
    for (bool swapped = true; swapped;) {
        swapped = false;
        for (int k = 0; k + 1 < n; ++k) {
            if (word[k] > word[k + 1]) {
                int t = word[k];
                word[k] = word[k + 1];
                word[k + 1] = t;
                sign = -sign;
                swapped = true;
            }
        }
        for (int k = 0; k + 1 < n; ++k) {
            if (word[k] == word[k + 1]) {
                for (int m = k; m + 2 < n; ++m) word[m] = word[m + 2];
                n -= 2;
                swapped = true;
                break;
            }
        }
    }

    for (int b = 0; b < 8; ++b) {
        if (kBladeLetterCount[b] != n) continue;
        int sorted[3] = {};
        for (int k = 0; k < n; ++k) sorted[k] = kBladeLetters[b][k];
        double parity = 1.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j + 1 < n - i; ++j)
                if (sorted[j] > sorted[j + 1]) {
                    int t = sorted[j];
                    sorted[j] = sorted[j + 1];
                    sorted[j + 1] = t;
                    parity = -parity;
                }
        bool same = true;
        for (int k = 0; k < n; ++k) same = same && sorted[k] == word[k];
        if (same) return {b, sign * parity};
    }
    return {0, 0.0}; // unreachable for valid blade indices
}

constexpr std::array<std::array<BladeTerm, 8>, 8> make_product_table() {
    std::array<std::array<BladeTerm, 8>, 8> table{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) table[i][j] = blade_product(i, j);
    return table;
}

inline constexpr auto kProductTable = make_product_table();

} // namespace detail

// General element of Cl(3,0), stored as coefficients over the blade basis.
struct Multivector {
    std::array<double, 8> c{};

    static Multivector scalar(double value);
    static Multivector blade(Blade b, double coefficient = 1.0);

    double scalar_part() const { return c[kScalar]; }
    double coefficient(Blade b) const { return c[static_cast<int>(b)]; }

    // Euclidean norm of the coefficient vector.
    double norm() const;
};

Multivector operator+(const Multivector& u, const Multivector& v);
Multivector operator-(const Multivector& u, const Multivector& v);
Multivector operator-(const Multivector& u);
Multivector operator*(const Multivector& u, double s);
Multivector operator*(double s, const Multivector& u);
Multivector& operator+=(Multivector& u, const Multivector& v);

// Geometric product, also available as operator*.
Multivector geometric_product(const Multivector& u, const Multivector& v);
Multivector operator*(const Multivector& u, const Multivector& v);

// Largest absolute coefficient difference between u and v.
double max_coeff_distance(const Multivector& u, const Multivector& v);
bool approx_equal(const Multivector& u, const Multivector& v, double tol);

// Grade projection; k must be in [0, 3].
Multivector grade_project(const Multivector& u, int k);

// Reversion: reverses the letter order of every blade.
Multivector reverse(const Multivector& u);

// Left multiplication by the unit pseudoscalar e123.
Multivector hodge_dual(const Multivector& u);

// Antisymmetrized outer product, computed grade by grade.
Multivector wedge(const Multivector& u, const Multivector& v);

// Mirror reflection e_axis -> -e_axis, extended to all blades containing
// that letter; axis is 1, 2 or 3.
Multivector reflect_axis(const Multivector& u, int axis);

Multivector unit_pseudoscalar();

// Oriented unit volume; sign -1 gives the left-handed orientation.
struct Pseudoscalar {
    int sign = +1;
    Multivector embed() const;
};

// Euclidean 3-vector with an embedding into grade 1.
struct Vector3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    // Normalizes the given components; throws DomainError on a zero vector.
    static Vector3 unit(double x, double y, double z);

    Multivector embed() const;
    double norm() const;
    Vector3 normalized() const;
    bool is_unit(double tol = 1e-9) const;
};

Vector3 operator+(const Vector3& a, const Vector3& b);
Vector3 operator-(const Vector3& a, const Vector3& b);
Vector3 operator-(const Vector3& a);
Vector3 operator*(const Vector3& a, double s);
Vector3 operator*(double s, const Vector3& a);

double dot(const Vector3& a, const Vector3& b);
Vector3 cross(const Vector3& a, const Vector3& b);
Vector3 vector_grade(const Multivector& u);

// Fixed 12-significant-digit debug form
// "c0 + c1 e1 + c2 e2 + c3 e3 + c4 e23 + c5 e31 + c6 e12 + c7 e123".
std::string to_string(const Multivector& u);

std::string format_double(double value, int significant_digits);
std::string format_double_shortest(double value);

} // namespace bb
