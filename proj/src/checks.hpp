#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "report.hpp"

namespace bb::checks {

struct Outcome {
    std::string expected;
    std::string computed;
    bool ok = false;
};

struct CheckDef {
    std::string id;
    std::string claim;
    std::function<Outcome(std::uint64_t seed)> run;
};

// All registered checks in presentation order: tutorial identities, the
// four refuted derivations, the subalgebra representation suite, the
// basis contradiction, and the Bell/CHSH statistics.
const std::vector<CheckDef>& registry();

// '*' matches any run, '?' any single character.
bool glob_match(const std::string& pattern, const std::string& text);

// Runs every check whose id matches the glob (empty matches all) and
// assembles the report.  A check that throws is recorded with status
// Error.  Throws UsageError when the glob matches nothing.
ReportDocument run_checks(const std::string& filter, std::uint64_t seed);

} // namespace bb::checks
