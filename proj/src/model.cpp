#include "model.hpp"

#include <cmath>

#include "errors.hpp"

namespace bb {

namespace {

void require_unit(const Vector3& v, const char* who) {
    if (!v.is_unit()) throw DomainError(std::string(who) + ": expected a unit vector");
}

BeableProduct split_even(const Multivector& u) {
    BeableProduct out;
    out.scalar_part = u.scalar_part();
    out.bivector_part = grade_project(u, 2);
    return out;
}

int levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? +1 : -1;
}

} // namespace

Multivector Mu::embed() const { return unit_pseudoscalar() * static_cast<double>(sign); }

Multivector BeableProduct::reconstruct() const {
    return Multivector::scalar(scalar_part) + bivector_part;
}

BeableProduct beable_product(const Vector3& a, const Vector3& b, Mu mu) {
    require_unit(a, "beable_product");
    require_unit(b, "beable_product");
    Multivector m = mu.embed();
    return split_even((m * a.embed()) * (m * b.embed()));
}

BeableProduct claimed_product(const Vector3& a, const Vector3& b, Mu mu) {
    require_unit(a, "claimed_product");
    require_unit(b, "claimed_product");
    BeableProduct out;
    out.scalar_part = -dot(a, b);
    out.bivector_part = hodge_dual(cross(a, b).embed()) * static_cast<double>(-mu.sign);
    return out;
}

Multivector mu_average(const std::function<Multivector(Mu)>& f) {
    return (f(Mu{+1}) + f(Mu{-1})) * 0.5;
}

Parity mu_parity(const ChristianExpr& expr) {
    return (expr.mu_factor_count % 2 == 0) ? Parity::Even : Parity::Odd;
}

BeableProduct corrected_handedness_product(const Vector3& a, const Vector3& b) {
    require_unit(a, "corrected_handedness_product");
    require_unit(b, "corrected_handedness_product");
    // -a.b - (-I)(-(a x b)): the axial vector flips alongside the
    // pseudoscalar, so the two sign changes cancel
    Multivector neg_i = Pseudoscalar{-1}.embed();
    return split_even((neg_i * a.embed()) * (neg_i * b.embed()));
}

namespace {

// The two branches of the orientation-indexed product, carried as even
// elements.  lambda = +1 lives over the right-flavor basis; lambda = -1
// lives over its negation, which IS the left-flavor basis.
EvenElement lambda_branch(const Vector3& a, const Vector3& b, int lambda) {
    Flavor f = lambda == +1 ? Flavor::Right : Flavor::Left;
    EvenElement xa, xb;
    xa.flavor = f;
    xb.flavor = f;
    xa.c = {0.0, a.x, a.y, a.z};
    xb.c = {0.0, b.x, b.y, b.z};
    return even_product(xa, xb);
}

} // namespace

Multivector flavor_correct_lambda_sum(const Vector3& a, const Vector3& b) {
    // embed() applies B_right = -B_left, so both branches land on one basis
    return (lambda_branch(a, b, +1).embed() + lambda_branch(a, b, -1).embed()) * 0.5;
}

Multivector naive_lambda_sum(const Vector3& a, const Vector3& b) {
    EvenElement plus = lambda_branch(a, b, +1);
    EvenElement minus = lambda_branch(a, b, -1);
    // deliberate misuse: read the left-flavored coefficients as if they
    // lived over the right basis, skipping the conversion law
    EvenElement mixed = minus;
    mixed.flavor = Flavor::Right;
    return (plus.embed() + mixed.embed()) * 0.5;
}

LambdaBasisReport lambda_basis_contradiction() {
    LambdaBasisReport rep;

    int row = 0;
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k) {
            if (j == k) continue;
            for (int l = 1; l <= 3; ++l)
                rep.constraint_rows[row][l - 1] = static_cast<double>(levi_civita(j, k, l));
            ++row;
        }

    // Gaussian elimination rank of the 6x3 system eps_jkl beta_l = 0
    auto rows = rep.constraint_rows;
    int rank = 0;
    for (int col = 0; col < 3 && rank < 6; ++col) {
        int pivot = -1;
        for (int r = rank; r < 6; ++r)
            if (std::fabs(rows[r][col]) > 1e-12) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < 6; ++r) {
            if (r == rank) continue;
            double factor = rows[r][col] / rows[rank][col];
            for (int c = 0; c < 3; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    rep.constraint_rank = rank;
    rep.betas_forced_zero = rank == 3;

    // each single-lambda instance against the fixed right-flavor table
    auto matches_right = [](int lambda) {
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) {
                EvenElement p = even_product(EvenElement::basis(Flavor::Right, j),
                                             EvenElement::basis(Flavor::Right, k));
                EvenElement expected;
                expected.flavor = Flavor::Right;
                expected.c[0] = (j == k) ? -1.0 : 0.0;
                for (int l = 1; l <= 3; ++l)
                    expected.c[l] = -static_cast<double>(lambda * levi_civita(j, k, l));
                for (int i = 0; i < 4; ++i)
                    if (p.c[i] != expected.c[i]) return false;
            }
        return true;
    };
    rep.lambda_plus_matches_right_flavor = matches_right(+1);
    rep.lambda_minus_matches_right_flavor = matches_right(-1);

    rep.sample_a = Vector3::unit(1.0, 2.0, 2.0);
    rep.sample_b = Vector3::unit(-2.0, 1.0, 0.0);
    rep.flavor_correct_sum = flavor_correct_lambda_sum(rep.sample_a, rep.sample_b);
    rep.naive_sum = naive_lambda_sum(rep.sample_a, rep.sample_b);
    return rep;
}

HiddenState sample_hidden(TrialRng& rng) {
    HiddenState h;
    h.lambda_hat = rng.next_unit_vector();
    h.mu_sign = rng.next_sign();
    return h;
}

int outcome(const OutcomeModel& model, Party party, const Vector3& direction,
            const HiddenState& hidden) {
    require_unit(direction, "outcome");
    switch (model.kind) {
        case ModelKind::ChristianBivector:
            return -hidden.mu_sign;
        case ModelKind::LocalSign: {
            int s = dot(direction, hidden.lambda_hat) >= 0.0 ? +1 : -1;
            return party == Party::Alice ? s : -s;
        }
    }
    throw UsageError("outcome: unknown model kind");
}

} // namespace bb
