#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bell.hpp"

namespace bb {

inline constexpr const char* kToolVersion = "1.0.0";

enum class CheckStatus { Confirmed, Refuted, Error };

const char* to_label(CheckStatus s);

struct Verdict {
    std::string check_id;
    std::string claim;
    std::string expected;
    std::string computed;
    CheckStatus status = CheckStatus::Error;
};

bool operator==(const Verdict& a, const Verdict& b);

// Outcome of a verification run.  timing_ms is volatile run metadata: it
// is shown in the text rendering but excluded from the stable JSON form
// and from equality, so that repeated runs with one seed serialize to
// byte-identical reports.
struct ReportDocument {
    std::string tool_version = kToolVersion;
    std::string config_echo;
    std::uint64_t seed = 0;
    double timing_ms = 0.0;
    std::vector<Verdict> verdicts;

    bool all_confirmed() const;
    std::size_t count(CheckStatus s) const;
};

bool operator==(const ReportDocument& a, const ReportDocument& b);

// Key-sorted JSON, stable across runs for a fixed seed and filter.
std::string to_stable_json(const ReportDocument& report);
// Inverse of to_stable_json up to timing_ms; throws UsageError on
// malformed input.
ReportDocument report_from_json(const std::string& text);

std::string render_text(const ReportDocument& report);
std::string render_csv(const ReportDocument& report);

struct SimulationRow {
    double theta_radians = 0.0;
    CorrelationEstimate estimate;
    double quantum_prediction = 0.0;
};

struct SimulationReport {
    std::string tool_version = kToolVersion;
    std::string model_name;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::vector<SimulationRow> rows;
};

std::string to_stable_json(const SimulationReport& report);
std::string render_csv(const SimulationReport& report);
std::string render_text(const SimulationReport& report);

struct ChshReport {
    std::string tool_version = kToolVersion;
    std::string model_name;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    // planar angles of a, a', b, b' in radians
    double angle_a = 0.0, angle_a_prime = 0.0, angle_b = 0.0, angle_b_prime = 0.0;
    ChshResult result;
};

std::string to_stable_json(const ChshReport& report);
std::string render_csv(const ChshReport& report);
std::string render_text(const ChshReport& report);

} // namespace bb
