#include "bivector_bell/bivector_bell.h"

#include <cmath>
#include <exception>
#include <string>

#include "bell.hpp"
#include "checks.hpp"
#include "errors.hpp"
#include "model.hpp"
#include "report.hpp"

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& message) {
    g_last_error = message;
    return code;
}

int parse_model(const char* name, bb::ModelKind* out) {
    if (name != nullptr) {
        const std::string text(name);
        if (text == BB_MODEL_LOCAL_SIGN) {
            *out = bb::ModelKind::LocalSign;
            return BB_OK;
        }
        if (text == BB_MODEL_CHRISTIAN_BIVECTOR) {
            *out = bb::ModelKind::ChristianBivector;
            return BB_OK;
        }
    }
    return fail(BB_USAGE, std::string("unknown model '") +
                              (name ? name : "(null)") + "'; expected " BB_MODEL_LOCAL_SIGN
                              " or " BB_MODEL_CHRISTIAN_BIVECTOR);
}

bb::Vector3 planar(double theta) { return {std::cos(theta), std::sin(theta), 0.0}; }

// Dispatches a render format against a report; keeps the result alive in
// `storage` so the C side can borrow a pointer.
template <typename Report>
const char* render_into(std::string& storage, const Report& report, const char* format) {
    const std::string text = format ? format : "(null)";
    if (text == "json")
        storage = bb::to_stable_json(report);
    else if (text == "csv")
        storage = bb::render_csv(report);
    else if (text == "text")
        storage = bb::render_text(report);
    else {
        fail(BB_USAGE, "unknown format '" + text + "'; expected json, csv, or text");
        return nullptr;
    }
    return storage.c_str();
}

} // namespace

struct bb_verify_run {
    bb::ReportDocument doc;
    std::string rendered;
};

struct bb_simulation {
    bb::SimulationReport report;
    std::string rendered;
};

struct bb_chsh_run {
    bb::ChshReport report;
    std::string rendered;
};

extern "C" {

const char* bb_version(void) { return bb::kToolVersion; }

const char* bb_last_error(void) { return g_last_error.c_str(); }

int bb_verify(const char* filter, uint64_t seed, bb_verify_run** out) {
    if (out == nullptr) return fail(BB_USAGE, "bb_verify: out is null");
    try {
        auto run = new bb_verify_run;
        run->doc = bb::checks::run_checks(filter ? filter : "", seed);
        *out = run;
        return run->doc.all_confirmed() ? BB_OK : BB_REFUTED;
    } catch (const bb::UsageError& e) {
        return fail(BB_USAGE, e.what());
    } catch (const std::exception& e) {
        return fail(BB_RUNTIME, e.what());
    }
}

size_t bb_verify_check_count(const bb_verify_run* run) {
    return run ? run->doc.verdicts.size() : 0;
}

size_t bb_verify_confirmed_count(const bb_verify_run* run) {
    return run ? run->doc.count(bb::CheckStatus::Confirmed) : 0;
}

int bb_simulate(const char* model, const double* thetas, size_t theta_count,
                uint64_t trials, uint64_t seed, bb_simulation** out) {
    if (out == nullptr) return fail(BB_USAGE, "bb_simulate: out is null");
    if (thetas == nullptr || theta_count == 0)
        return fail(BB_USAGE, "bb_simulate: empty angle sweep");
    bb::ModelKind kind;
    if (int rc = parse_model(model, &kind); rc != BB_OK) return rc;
    try {
        bb::ExperimentConfig cfg;
        cfg.model.kind = kind;
        for (size_t i = 0; i < theta_count; ++i)
            cfg.angle_pairs.emplace_back(planar(0.0), planar(thetas[i]));
        cfg.trials = trials;
        cfg.seed = seed;

        auto sim = new bb_simulation;
        sim->report.model_name = model;
        sim->report.seed = seed;
        sim->report.trials = trials;
        for (size_t i = 0; i < theta_count; ++i) {
            bb::SimulationRow row;
            row.theta_radians = thetas[i];
            row.estimate = bb::estimate_correlation(cfg, i);
            row.quantum_prediction =
                bb::quantum_prediction(cfg.angle_pairs[i].first, cfg.angle_pairs[i].second);
            sim->report.rows.push_back(row);
        }
        *out = sim;
        return BB_OK;
    } catch (const bb::UsageError& e) {
        return fail(BB_USAGE, e.what());
    } catch (const std::exception& e) {
        return fail(BB_RUNTIME, e.what());
    }
}

size_t bb_simulate_row_count(const bb_simulation* sim) {
    return sim ? sim->report.rows.size() : 0;
}

int bb_simulate_row(const bb_simulation* sim, size_t i, double* theta, double* mean,
                    double* stderr_of_mean, double* quantum) {
    if (sim == nullptr || i >= sim->report.rows.size())
        return fail(BB_USAGE, "bb_simulate_row: index out of range");
    const bb::SimulationRow& row = sim->report.rows[i];
    if (theta) *theta = row.theta_radians;
    if (mean) *mean = row.estimate.mean;
    if (stderr_of_mean) *stderr_of_mean = row.estimate.stderr_of_mean;
    if (quantum) *quantum = row.quantum_prediction;
    return BB_OK;
}

int bb_chsh(const char* model, const double angles[4], uint64_t trials, uint64_t seed,
            bb_chsh_run** out) {
    if (out == nullptr) return fail(BB_USAGE, "bb_chsh: out is null");
    if (angles == nullptr) return fail(BB_USAGE, "bb_chsh: angles is null");
    bb::ModelKind kind;
    if (int rc = parse_model(model, &kind); rc != BB_OK) return rc;
    try {
        bb::ExperimentConfig cfg;
        cfg.model.kind = kind;
        bb::Vector3 a = planar(angles[0]), a_prime = planar(angles[1]);
        bb::Vector3 b = planar(angles[2]), b_prime = planar(angles[3]);
        cfg.angle_pairs = {{a, b}, {a, b_prime}, {a_prime, b}, {a_prime, b_prime}};
        cfg.trials = trials;
        cfg.seed = seed;

        auto run = new bb_chsh_run;
        run->report.model_name = model;
        run->report.seed = seed;
        run->report.trials = trials;
        run->report.angle_a = angles[0];
        run->report.angle_a_prime = angles[1];
        run->report.angle_b = angles[2];
        run->report.angle_b_prime = angles[3];
        run->report.result = bb::chsh(cfg);
        *out = run;
        return BB_OK;
    } catch (const bb::UsageError& e) {
        return fail(BB_USAGE, e.what());
    } catch (const std::exception& e) {
        return fail(BB_RUNTIME, e.what());
    }
}

double bb_chsh_s_value(const bb_chsh_run* run) {
    return run ? run->report.result.s_value : 0.0;
}

double bb_chsh_quantum_value(const bb_chsh_run* run) {
    return run ? run->report.result.quantum_value : 0.0;
}

const char* bb_verify_render(bb_verify_run* run, const char* format) {
    if (run == nullptr) {
        fail(BB_USAGE, "bb_verify_render: run is null");
        return nullptr;
    }
    return render_into(run->rendered, run->doc, format);
}

const char* bb_simulate_render(bb_simulation* sim, const char* format) {
    if (sim == nullptr) {
        fail(BB_USAGE, "bb_simulate_render: sim is null");
        return nullptr;
    }
    return render_into(sim->rendered, sim->report, format);
}

const char* bb_chsh_render(bb_chsh_run* run, const char* format) {
    if (run == nullptr) {
        fail(BB_USAGE, "bb_chsh_render: run is null");
        return nullptr;
    }
    return render_into(run->rendered, run->report, format);
}

void bb_verify_free(bb_verify_run* run) { delete run; }

void bb_simulate_free(bb_simulation* sim) { delete sim; }

void bb_chsh_free(bb_chsh_run* run) { delete run; }

} // extern "C"
