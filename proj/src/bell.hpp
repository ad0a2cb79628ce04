#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "model.hpp"
#include "multivector.hpp"

namespace bb {

struct ExperimentConfig {
    OutcomeModel model;
    std::vector<std::pair<Vector3, Vector3>> angle_pairs; // (Alice, Bob) directions
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

struct CorrelationEstimate {
    double mean = 0.0;
    double stderr_of_mean = 0.0;
    std::uint64_t trials = 0;
};

// Monte Carlo mean of A(a, h) * B(b, h) over `trials` hidden states.
//
// The hidden-state stream depends only on (seed, trial index), never on
// the pair index: every pair of one config sees the same hidden states,
// and the per-trial sum of +-1 products is accumulated in integers, so
// the result is bit-identical for a fixed seed regardless of evaluation
// order.  Throws UsageError on empty config, bad index, zero trials, or
// non-unit directions.
CorrelationEstimate estimate_correlation(const ExperimentConfig& cfg, std::size_t pair_index);

// Singlet-state prediction -a.b for unit vectors.
double quantum_prediction(const Vector3& a, const Vector3& b);

struct ChshResult {
    CorrelationEstimate e_ab, e_ab_prime, e_a_prime_b, e_a_prime_b_prime;
    double s_value = 0.0;
    double combined_stderr = 0.0;
    double classical_bound = 2.0;
    double quantum_value = 0.0;
};

// S = E(a,b) - E(a,b') + E(a',b) + E(a',b') from a config holding exactly
// the four pairs in that order; quantum_value is the same combination of
// -a.b at the same angles.
ChshResult chsh(const ExperimentConfig& cfg);

} // namespace bb
