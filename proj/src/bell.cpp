#include "bell.hpp"

#include <cmath>
#include <cstdlib>

#include "errors.hpp"
#include "rng.hpp"

namespace bb {

namespace {

void validate(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw UsageError("ExperimentConfig: trials must be >= 1");
    if (cfg.angle_pairs.empty()) throw UsageError("ExperimentConfig: no angle pairs");
    for (const auto& [a, b] : cfg.angle_pairs)
        if (!a.is_unit(1e-12) || !b.is_unit(1e-12))
            throw UsageError("ExperimentConfig: directions must be unit vectors");
}

} // namespace

CorrelationEstimate estimate_correlation(const ExperimentConfig& cfg, std::size_t pair_index) {
    validate(cfg);
    if (pair_index >= cfg.angle_pairs.size())
        throw UsageError("estimate_correlation: pair index out of range");
    const Vector3& a = cfg.angle_pairs[pair_index].first;
    const Vector3& b = cfg.angle_pairs[pair_index].second;

    std::int64_t sum = 0;
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        TrialRng rng(cfg.seed, t);
        HiddenState h = sample_hidden(rng);
        sum += outcome(cfg.model, Party::Alice, a, h) * outcome(cfg.model, Party::Bob, b, h);
    }

    CorrelationEstimate est;
    est.trials = cfg.trials;
    double n = static_cast<double>(cfg.trials);
    est.mean = static_cast<double>(sum) / n;
    if (cfg.trials > 1) {
        // products are +-1, so the sample variance is n(1 - mean^2)/(n-1)
        double variance = (1.0 - est.mean * est.mean) * n / (n - 1.0);
        est.stderr_of_mean = std::sqrt(std::max(variance, 0.0) / n);
    }
    return est;
}

double quantum_prediction(const Vector3& a, const Vector3& b) {
    if (!a.is_unit() || !b.is_unit())
        throw DomainError("quantum_prediction: expected unit vectors");
    return -dot(a, b);
}

ChshResult chsh(const ExperimentConfig& cfg) {
    validate(cfg);
    if (cfg.angle_pairs.size() != 4)
        throw UsageError("chsh: config must hold exactly the four pairs "
                         "(a,b), (a,b'), (a',b), (a',b')");

    ChshResult out;
    out.e_ab = estimate_correlation(cfg, 0);
    out.e_ab_prime = estimate_correlation(cfg, 1);
    out.e_a_prime_b = estimate_correlation(cfg, 2);
    out.e_a_prime_b_prime = estimate_correlation(cfg, 3);
    out.s_value = out.e_ab.mean - out.e_ab_prime.mean + out.e_a_prime_b.mean +
                  out.e_a_prime_b_prime.mean;
    out.combined_stderr = std::sqrt(
        out.e_ab.stderr_of_mean * out.e_ab.stderr_of_mean +
        out.e_ab_prime.stderr_of_mean * out.e_ab_prime.stderr_of_mean +
        out.e_a_prime_b.stderr_of_mean * out.e_a_prime_b.stderr_of_mean +
        out.e_a_prime_b_prime.stderr_of_mean * out.e_a_prime_b_prime.stderr_of_mean);
    out.classical_bound = 2.0;
    out.quantum_value = quantum_prediction(cfg.angle_pairs[0].first, cfg.angle_pairs[0].second) -
                        quantum_prediction(cfg.angle_pairs[1].first, cfg.angle_pairs[1].second) +
                        quantum_prediction(cfg.angle_pairs[2].first, cfg.angle_pairs[2].second) +
                        quantum_prediction(cfg.angle_pairs[3].first, cfg.angle_pairs[3].second);
    return out;
}

} // namespace bb
