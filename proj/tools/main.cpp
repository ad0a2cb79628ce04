#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bivector_bell/bivector_bell.h"

namespace {

// Angle expressions: "0.5", "pi", "2pi", "2*pi", "pi/4", "3pi/4", "-pi/2".
bool parse_angle(const std::string& text, double* out) {
    std::size_t pos = 0;
    double sign = 1.0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1.0;
        ++pos;
    }

    double coeff = 1.0;
    bool saw_number = false;
    std::size_t num_end = pos;
    while (num_end < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[num_end])) || text[num_end] == '.'))
        ++num_end;
    if (num_end > pos) {
        try {
            std::size_t used = 0;
            coeff = std::stod(text.substr(pos, num_end - pos), &used);
            if (used != num_end - pos) return false;
        } catch (const std::exception&) {
            return false;
        }
        saw_number = true;
        pos = num_end;
    }

    bool saw_pi = false;
    if (saw_number && pos < text.size() && text[pos] == '*') ++pos;
    if (text.compare(pos, 2, "pi") == 0) {
        saw_pi = true;
        pos += 2;
    }
    if (!saw_number && !saw_pi) return false;

    double divisor = 1.0;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        try {
            std::size_t used = 0;
            divisor = std::stod(text.substr(pos), &used);
            pos += used;
        } catch (const std::exception&) {
            return false;
        }
        if (divisor == 0.0) return false;
    }
    if (pos != text.size()) return false;

    *out = sign * coeff * (saw_pi ? M_PI : 1.0) / divisor;
    return true;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t end = text.find(sep, start);
        parts.push_back(text.substr(start, end - start));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return parts;
}

// "start:end:count" with angle expressions for the endpoints.
bool parse_sweep(const std::string& text, std::vector<double>* out) {
    std::vector<std::string> parts = split(text, ':');
    if (parts.size() != 3) return false;
    double start = 0.0, end = 0.0;
    if (!parse_angle(parts[0], &start) || !parse_angle(parts[1], &end)) return false;
    long count = 0;
    try {
        std::size_t used = 0;
        count = std::stol(parts[2], &used);
        if (used != parts[2].size()) return false;
    } catch (const std::exception&) {
        return false;
    }
    if (count < 1) return false;

    out->clear();
    if (count == 1) {
        out->push_back(start);
        return true;
    }
    for (long i = 0; i < count; ++i)
        out->push_back(start + (end - start) * static_cast<double>(i) /
                                   static_cast<double>(count - 1));
    return true;
}

bool parse_angle_list(const std::string& text, std::size_t expected,
                      std::vector<double>* out) {
    std::vector<std::string> parts = split(text, ':');
    if (parts.size() != expected) return false;
    out->clear();
    for (const std::string& part : parts) {
        double value = 0.0;
        if (!parse_angle(part, &value)) return false;
        out->push_back(value);
    }
    return true;
}

int usage_error(const std::string& message) {
    std::fprintf(stderr, "error: %s\n", message.c_str());
    return BB_USAGE;
}

// --seed beats BIVECTOR_BELL_SEED beats 42.
int resolve_seed(const std::optional<std::uint64_t>& flag, std::uint64_t* out) {
    if (flag) {
        *out = *flag;
        return BB_OK;
    }
    if (const char* env = std::getenv("BIVECTOR_BELL_SEED"); env && *env) {
        char* end = nullptr;
        unsigned long long value = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            return usage_error(std::string("BIVECTOR_BELL_SEED is not an integer: '") + env +
                               "'");
        *out = value;
        return BB_OK;
    }
    *out = 42;
    return BB_OK;
}

int emit(const char* report, const std::string& out_path) {
    if (report == nullptr) return usage_error(bb_last_error());
    if (out_path.empty()) {
        std::fputs(report, stdout);
        return BB_OK;
    }
    std::ofstream file(out_path, std::ios::binary);
    file << report;
    if (!file) return usage_error("cannot write '" + out_path + "'");
    return BB_OK;
}

struct CommonFlags {
    std::optional<std::uint64_t> seed_flag;
    std::string format;
    std::string out_path;

    void attach(CLI::App* cmd, const std::string& default_format) {
        format = default_format;
        cmd->add_option("--seed", seed_flag, "RNG seed (default: BIVECTOR_BELL_SEED or 42)");
        cmd->add_option("--format", format, "Report format: json, csv, or text")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
        cmd->add_option("--out", out_path, "Write the report to this file instead of stdout");
    }
};

int run_verify(const std::string& filter, const CommonFlags& flags) {
    std::uint64_t seed = 0;
    if (int rc = resolve_seed(flags.seed_flag, &seed); rc != BB_OK) return rc;

    bb_verify_run* run = nullptr;
    int status = bb_verify(filter.c_str(), seed, &run);
    if (status != BB_OK && status != BB_REFUTED) {
        std::fprintf(stderr, "error: %s\n", bb_last_error());
        return status;
    }
    int rc = emit(bb_verify_render(run, flags.format.c_str()), flags.out_path);
    std::fprintf(stderr, "verify: %zu of %zu checks confirmed (seed %llu)\n",
                 bb_verify_confirmed_count(run), bb_verify_check_count(run),
                 static_cast<unsigned long long>(seed));
    bb_verify_free(run);
    return rc != BB_OK ? rc : status;
}

int run_simulate(const std::string& model, const std::string& sweep, std::uint64_t trials,
                 const CommonFlags& flags) {
    std::uint64_t seed = 0;
    if (int rc = resolve_seed(flags.seed_flag, &seed); rc != BB_OK) return rc;
    std::vector<double> thetas;
    if (!parse_sweep(sweep, &thetas))
        return usage_error("--sweep expects start:end:count with angle expressions, got '" +
                           sweep + "'");

    bb_simulation* sim = nullptr;
    int status = bb_simulate(model.c_str(), thetas.data(), thetas.size(), trials, seed, &sim);
    if (status != BB_OK) {
        std::fprintf(stderr, "error: %s\n", bb_last_error());
        return status;
    }
    int rc = emit(bb_simulate_render(sim, flags.format.c_str()), flags.out_path);
    std::fprintf(stderr, "simulate: %zu angles x %llu trials, model %s (seed %llu)\n",
                 bb_simulate_row_count(sim), static_cast<unsigned long long>(trials),
                 model.c_str(), static_cast<unsigned long long>(seed));
    bb_simulate_free(sim);
    return rc;
}

int run_chsh(const std::string& model, const std::string& angles_text, std::uint64_t trials,
             const CommonFlags& flags) {
    std::uint64_t seed = 0;
    if (int rc = resolve_seed(flags.seed_flag, &seed); rc != BB_OK) return rc;
    std::vector<double> angles;
    if (!parse_angle_list(angles_text, 4, &angles))
        return usage_error("--angles expects a:a':b:b' with angle expressions, got '" +
                           angles_text + "'");

    bb_chsh_run* run = nullptr;
    int status = bb_chsh(model.c_str(), angles.data(), trials, seed, &run);
    if (status != BB_OK) {
        std::fprintf(stderr, "error: %s\n", bb_last_error());
        return status;
    }
    int rc = emit(bb_chsh_render(run, flags.format.c_str()), flags.out_path);
    std::fprintf(stderr, "chsh: S = %.6f, quantum %.6f, bound 2 (seed %llu)\n",
                 bb_chsh_s_value(run), bb_chsh_quantum_value(run),
                 static_cast<unsigned long long>(seed));
    bb_chsh_free(run);
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("bivector-bell ") + bb_version() +
                 ": Cl(3,0) identity checks and Bell-test simulations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", bb_version());

    auto* verify = app.add_subcommand(
        "verify", "Run the verification checks and report confirmed/refuted per check");
    std::string filter = "*";
    verify->add_option("--filter", filter, "Glob over check ids, e.g. 'error1.*'")
        ->capture_default_str();
    CommonFlags verify_flags;
    verify_flags.attach(verify, "text");

    auto* simulate = app.add_subcommand(
        "simulate", "Estimate E(a,b) for a model over a sweep of analyzer angles");
    std::string sim_model = BB_MODEL_LOCAL_SIGN;
    std::string sweep = "0:pi:17";
    std::uint64_t sim_trials = 100000;
    simulate
        ->add_option("--model", sim_model,
                     "Outcome model: " BB_MODEL_LOCAL_SIGN " or " BB_MODEL_CHRISTIAN_BIVECTOR)
        ->capture_default_str();
    simulate->add_option("--sweep", sweep, "Angle sweep start:end:count, e.g. 0:pi:17")
        ->capture_default_str();
    simulate->add_option("--trials", sim_trials, "Trials per angle")->capture_default_str();
    CommonFlags sim_flags;
    sim_flags.attach(simulate, "csv");

    auto* chsh = app.add_subcommand(
        "chsh", "Estimate the CHSH S value at four analyzer angles");
    std::string chsh_model = BB_MODEL_LOCAL_SIGN;
    std::string angles = "0:pi/2:pi/4:3pi/4";
    std::uint64_t chsh_trials = 100000;
    chsh->add_option("--model", chsh_model,
                     "Outcome model: " BB_MODEL_LOCAL_SIGN " or " BB_MODEL_CHRISTIAN_BIVECTOR)
        ->capture_default_str();
    chsh->add_option("--angles", angles, "Angles a:a':b:b', e.g. 0:pi/2:pi/4:3pi/4")
        ->capture_default_str();
    chsh->add_option("--trials", chsh_trials, "Trials per correlation")->capture_default_str();
    CommonFlags chsh_flags;
    chsh_flags.attach(chsh, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return BB_USAGE;
    }

    if (verify->parsed()) return run_verify(filter, verify_flags);
    if (simulate->parsed()) return run_simulate(sim_model, sweep, sim_trials, sim_flags);
    return run_chsh(chsh_model, angles, chsh_trials, chsh_flags);
}
