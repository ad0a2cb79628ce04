#pragma once

#include <array>
#include <functional>
#include <string>

#include "multivector.hpp"
#include "rng.hpp"
#include "subalgebra.hpp"

namespace bb {

// Orientation (handedness) hidden variable: mu = sign * e123, mu^2 = -1.
struct Mu {
    int sign = +1;
    Multivector embed() const;
};

// Scalar/bivector split of a product of two orientation-scaled vectors.
struct BeableProduct {
    double scalar_part = 0.0;
    Multivector bivector_part; // grade 2 only

    Multivector reconstruct() const;
};

// (mu a)(mu b) for unit a, b.  The two mu factors multiply to mu^2 = -1
// for either orientation, so the result -a.b - a^b does not depend on mu.
BeableProduct beable_product(const Vector3& a, const Vector3& b, Mu mu);

// The orientation-dependent form -a.b - mu_sign I (a x b): the wedge term
// wrongly tracks mu, so a fair-coin orientation average cancels it.  Kept
// as the documented anti-pattern under test; not part of the public C API.
BeableProduct claimed_product(const Vector3& a, const Vector3& b, Mu mu);

// Exact fair-coin average (f(+I) + f(-I)) / 2.
Multivector mu_average(const std::function<Multivector(Mu)>& f);

enum class Parity { Even, Odd };

// Symbolic tag for a product expression: how many mu factors it contains,
// counting the orientation measure's own factor.
struct ChristianExpr {
    std::string name;
    int mu_factor_count = 0;
};

// Odd => the fair-coin orientation average is exactly 0; Even => the
// average equals the value at mu = +I.
Parity mu_parity(const ChristianExpr& expr);

// (-I a)(-I b) with the axial vector's sign flipped along with the
// pseudoscalar: equals beable_product exactly.
BeableProduct corrected_handedness_product(const Vector3& a, const Vector3& b);

// Analysis of the orientation-indexed bivector basis beta_l(lambda).
//
// Demanding beta_j beta_k = -delta_jk - lambda eps_jkl beta_l for BOTH
// lambda signs over one fixed basis forces eps_jkl beta_l = 0 for all
// j != k, i.e. every beta = 0: the basis cannot carry the orientation.
// Treating lambda as selecting the subalgebra flavor instead keeps the
// algebra consistent, and the flavor-correct average of the two branch
// products retains the full -a.b - a^b.
struct LambdaBasisReport {
    std::array<std::array<double, 3>, 6> constraint_rows{}; // eps_jk. for j != k
    int constraint_rank = 0;
    bool betas_forced_zero = false;
    bool lambda_plus_matches_right_flavor = false;
    bool lambda_minus_matches_right_flavor = false; // false IS the contradiction
    Vector3 sample_a, sample_b;
    Multivector flavor_correct_sum; // -a.b - a^b at the sample pair
    Multivector naive_sum;          // -a.b: coefficients added across flavors
};

LambdaBasisReport lambda_basis_contradiction();

// Average of the two branch products with the lambda = -1 branch converted
// through B_right = -B_left before coefficients are combined.
Multivector flavor_correct_lambda_sum(const Vector3& a, const Vector3& b);

// The illegal step under test: branch coefficients added as raw arrays,
// ignoring that they live over different flavors; the wedge term cancels.
Multivector naive_lambda_sum(const Vector3& a, const Vector3& b);

enum class ModelKind { LocalSign, ChristianBivector };

enum class Party { Alice, Bob };

struct OutcomeModel {
    ModelKind kind = ModelKind::LocalSign;
};

struct HiddenState {
    int mu_sign = +1;
    Vector3 lambda_hat{0.0, 0.0, 1.0};
};

// One orientation coin and one isotropic unit vector; consumes a fixed
// number of draws per call.
HiddenState sample_hidden(TrialRng& rng);

// Detector click in {-1, +1}.  ChristianBivector ignores the direction and
// returns -mu_sign at both parties; LocalSign returns the sign of
// direction . lambda_hat at Alice and its negation at Bob, ties to +1.
int outcome(const OutcomeModel& model, Party party, const Vector3& direction,
            const HiddenState& hidden);

} // namespace bb
