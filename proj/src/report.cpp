#include "report.hpp"

#include <json.hpp>

#include "errors.hpp"
#include "multivector.hpp"

namespace bb {

using nlohmann::json;

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string num(double v) { return format_double_shortest(v); }

json estimate_json(const CorrelationEstimate& e) {
    return json{{"mean", e.mean}, {"stderr", e.stderr_of_mean}, {"trials", e.trials}};
}

} // namespace

const char* to_label(CheckStatus s) {
    switch (s) {
        case CheckStatus::Confirmed: return "confirmed";
        case CheckStatus::Refuted: return "refuted";
        case CheckStatus::Error: return "error";
    }
    return "error";
}

namespace {

CheckStatus status_from_label(const std::string& label) {
    if (label == "confirmed") return CheckStatus::Confirmed;
    if (label == "refuted") return CheckStatus::Refuted;
    if (label == "error") return CheckStatus::Error;
    throw UsageError("report: unknown status label '" + label + "'");
}

} // namespace

bool operator==(const Verdict& a, const Verdict& b) {
    return a.check_id == b.check_id && a.claim == b.claim && a.expected == b.expected &&
           a.computed == b.computed && a.status == b.status;
}

bool ReportDocument::all_confirmed() const {
    for (const auto& v : verdicts)
        if (v.status != CheckStatus::Confirmed) return false;
    return true;
}

std::size_t ReportDocument::count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& v : verdicts)
        if (v.status == s) ++n;
    return n;
}

bool operator==(const ReportDocument& a, const ReportDocument& b) {
    return a.tool_version == b.tool_version && a.config_echo == b.config_echo &&
           a.seed == b.seed && a.verdicts == b.verdicts;
}

std::string to_stable_json(const ReportDocument& report) {
    json checks = json::array();
    for (const auto& v : report.verdicts)
        checks.push_back(json{{"check_id", v.check_id},
                              {"claim", v.claim},
                              {"computed", v.computed},
                              {"expected", v.expected},
                              {"status", to_label(v.status)}});
    json doc{{"checks", checks},
             {"config", report.config_echo},
             {"seed", report.seed},
             {"summary",
              {{"confirmed", report.count(CheckStatus::Confirmed)},
               {"error", report.count(CheckStatus::Error)},
               {"refuted", report.count(CheckStatus::Refuted)},
               {"total", report.verdicts.size()}}},
             {"version", report.tool_version}};
    return doc.dump(2) + "\n";
}

ReportDocument report_from_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw UsageError("report: malformed JSON");
    try {
        ReportDocument report;
        report.tool_version = doc.at("version").get<std::string>();
        report.config_echo = doc.at("config").get<std::string>();
        report.seed = doc.at("seed").get<std::uint64_t>();
        for (const auto& item : doc.at("checks")) {
            Verdict v;
            v.check_id = item.at("check_id").get<std::string>();
            v.claim = item.at("claim").get<std::string>();
            v.computed = item.at("computed").get<std::string>();
            v.expected = item.at("expected").get<std::string>();
            v.status = status_from_label(item.at("status").get<std::string>());
            report.verdicts.push_back(std::move(v));
        }
        return report;
    } catch (const json::exception& e) {
        throw UsageError(std::string("report: missing or mistyped field: ") + e.what());
    }
}

std::string render_text(const ReportDocument& report) {
    std::string out;
    for (const auto& v : report.verdicts) {
        out += '[';
        out += to_label(v.status);
        out += "] ";
        out += v.check_id;
        out += ": ";
        out += v.claim;
        out += " [expected ";
        out += v.expected;
        out += "; computed ";
        out += v.computed;
        out += "]\n";
    }
    out += "summary: " + std::to_string(report.count(CheckStatus::Confirmed)) + " confirmed, " +
           std::to_string(report.count(CheckStatus::Refuted)) + " refuted, " +
           std::to_string(report.count(CheckStatus::Error)) + " errored of " +
           std::to_string(report.verdicts.size()) + " checks (seed " +
           std::to_string(report.seed) + ", " + format_double(report.timing_ms, 4) + " ms)\n";
    return out;
}

std::string render_csv(const ReportDocument& report) {
    std::string out = "check_id,status,claim,expected,computed\n";
    for (const auto& v : report.verdicts) {
        out += csv_field(v.check_id);
        out += ',';
        out += to_label(v.status);
        out += ',';
        out += csv_field(v.claim);
        out += ',';
        out += csv_field(v.expected);
        out += ',';
        out += csv_field(v.computed);
        out += '\n';
    }
    return out;
}

std::string to_stable_json(const SimulationReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows)
        rows.push_back(json{{"mean", r.estimate.mean},
                            {"quantum_prediction", r.quantum_prediction},
                            {"stderr", r.estimate.stderr_of_mean},
                            {"theta_radians", r.theta_radians},
                            {"trials", r.estimate.trials}});
    json doc{{"model", report.model_name},
             {"rows", rows},
             {"seed", report.seed},
             {"trials", report.trials},
             {"version", report.tool_version}};
    return doc.dump(2) + "\n";
}

std::string render_csv(const SimulationReport& report) {
    std::string out = "theta_radians,mean,stderr,trials,quantum_prediction\n";
    for (const auto& r : report.rows) {
        out += num(r.theta_radians);
        out += ',';
        out += num(r.estimate.mean);
        out += ',';
        out += num(r.estimate.stderr_of_mean);
        out += ',';
        out += std::to_string(r.estimate.trials);
        out += ',';
        out += num(r.quantum_prediction);
        out += '\n';
    }
    return out;
}

std::string render_text(const SimulationReport& report) {
    std::string out = "model " + report.model_name + ", trials " +
                      std::to_string(report.trials) + ", seed " + std::to_string(report.seed) +
                      "\n";
    out += "theta_radians  mean  stderr  quantum_prediction\n";
    for (const auto& r : report.rows) {
        out += format_double(r.theta_radians, 6);
        out += "  ";
        out += format_double(r.estimate.mean, 6);
        out += "  ";
        out += format_double(r.estimate.stderr_of_mean, 4);
        out += "  ";
        out += format_double(r.quantum_prediction, 6);
        out += '\n';
    }
    return out;
}

std::string to_stable_json(const ChshReport& report) {
    json doc{{"angles",
              {{"a", report.angle_a},
               {"a_prime", report.angle_a_prime},
               {"b", report.angle_b},
               {"b_prime", report.angle_b_prime}}},
             {"classical_bound", report.result.classical_bound},
             {"combined_stderr", report.result.combined_stderr},
             {"estimates",
              {{"ab", estimate_json(report.result.e_ab)},
               {"ab_prime", estimate_json(report.result.e_ab_prime)},
               {"a_prime_b", estimate_json(report.result.e_a_prime_b)},
               {"a_prime_b_prime", estimate_json(report.result.e_a_prime_b_prime)}}},
             {"model", report.model_name},
             {"quantum_value", report.result.quantum_value},
             {"s_value", report.result.s_value},
             {"seed", report.seed},
             {"trials", report.trials},
             {"version", report.tool_version}};
    return doc.dump(2) + "\n";
}

std::string render_csv(const ChshReport& report) {
    const ChshResult& r = report.result;
    std::string out =
        "e_ab,e_ab_stderr,e_ab_prime,e_ab_prime_stderr,e_a_prime_b,e_a_prime_b_stderr,"
        "e_a_prime_b_prime,e_a_prime_b_prime_stderr,s_value,combined_stderr,"
        "classical_bound,quantum_value,trials\n";
    out += num(r.e_ab.mean) + ',' + num(r.e_ab.stderr_of_mean) + ',';
    out += num(r.e_ab_prime.mean) + ',' + num(r.e_ab_prime.stderr_of_mean) + ',';
    out += num(r.e_a_prime_b.mean) + ',' + num(r.e_a_prime_b.stderr_of_mean) + ',';
    out += num(r.e_a_prime_b_prime.mean) + ',' + num(r.e_a_prime_b_prime.stderr_of_mean) + ',';
    out += num(r.s_value) + ',' + num(r.combined_stderr) + ',';
    out += num(r.classical_bound) + ',' + num(r.quantum_value) + ',';
    out += std::to_string(report.trials) + '\n';
    return out;
}

std::string render_text(const ChshReport& report) {
    const ChshResult& r = report.result;
    auto line = [](const char* label, const CorrelationEstimate& e) {
        return std::string(label) + " = " + format_double(e.mean, 6) + " +- " +
               format_double(e.stderr_of_mean, 4) + "\n";
    };
    std::string out = "model " + report.model_name + ", trials " +
                      std::to_string(report.trials) + ", seed " + std::to_string(report.seed) +
                      "\n";
    out += "angles (radians): a=" + format_double(report.angle_a, 6) +
           " a'=" + format_double(report.angle_a_prime, 6) +
           " b=" + format_double(report.angle_b, 6) +
           " b'=" + format_double(report.angle_b_prime, 6) + "\n";
    out += line("E(a,b)  ", r.e_ab);
    out += line("E(a,b') ", r.e_ab_prime);
    out += line("E(a',b) ", r.e_a_prime_b);
    out += line("E(a',b')", r.e_a_prime_b_prime);
    out += "S = " + format_double(r.s_value, 6) + " +- " +
           format_double(r.combined_stderr, 4) + "\n";
    out += "classical bound  |S| <= " + format_double(r.classical_bound, 6) + "\n";
    out += "quantum value at these angles = " + format_double(r.quantum_value, 6) + "\n";
    return out;
}

} // namespace bb
