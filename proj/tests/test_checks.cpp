#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "checks.hpp"
#include "errors.hpp"
#include "report.hpp"

using namespace bb;
using namespace bb::checks;

TEST_CASE("registry shape") {
    const auto& defs = registry();
    CHECK(defs.size() >= 30);

    std::set<std::string> ids;
    const std::set<std::string> families = {"tutorial", "error1",    "error2", "error3",
                                            "error4",   "subalgebra", "onepager", "bell"};
    for (const CheckDef& def : defs) {
        CHECK(ids.insert(def.id).second); // unique
        CHECK_FALSE(def.claim.empty());
        std::size_t dot = def.id.find('.');
        REQUIRE(dot != std::string::npos);
        CHECK(families.count(def.id.substr(0, dot)) == 1);
    }

    // ids that downstream tooling keys on
    for (const char* id : {"error1.mu-average", "error2.parity", "error3.limit",
                           "error4.rotor-axis", "tutorial.hodge", "subalgebra.triple-product",
                           "onepager.lambda-basis", "bell.chsh-localsign"})
        CHECK(ids.count(id) == 1);
}

TEST_CASE("glob matching") {
    CHECK(glob_match("*", "anything.at-all"));
    CHECK(glob_match("error1.*", "error1.mu-average"));
    CHECK_FALSE(glob_match("error1.*", "error2.parity"));
    CHECK(glob_match("error?.parity", "error2.parity"));
    CHECK_FALSE(glob_match("error?.parity", "error12.parity"));
    CHECK(glob_match("*.limit", "error3.limit"));
    CHECK(glob_match("*a*b*", "aXXbYY"));
    CHECK_FALSE(glob_match("*a*b*", "bYYa"));
    CHECK(glob_match("bell.chsh-*", "bell.chsh-localsign"));
    CHECK(glob_match("exact", "exact"));
    CHECK_FALSE(glob_match("exact", "exactly"));
    CHECK_FALSE(glob_match("", "x"));
    CHECK(glob_match("**", "x"));
}

TEST_CASE("full run confirms everything") {
    ReportDocument doc = run_checks("*", 42);
    CHECK(doc.verdicts.size() == registry().size());
    CHECK(doc.all_confirmed());
    CHECK(doc.count(CheckStatus::Confirmed) == doc.verdicts.size());
    CHECK(doc.count(CheckStatus::Refuted) == 0);
    CHECK(doc.count(CheckStatus::Error) == 0);
    CHECK(doc.seed == 42);

    for (const Verdict& v : doc.verdicts) {
        CHECK_FALSE(v.expected.empty());
        CHECK_FALSE(v.computed.empty());
    }
}

TEST_CASE("filtered runs select matching subsets") {
    ReportDocument error2 = run_checks("error2.*", 42);
    CHECK(error2.verdicts.size() == 4);
    for (const Verdict& v : error2.verdicts)
        CHECK(v.check_id.rfind("error2.", 0) == 0);

    ReportDocument one = run_checks("tutorial.hodge", 42);
    CHECK(one.verdicts.size() == 1);
    CHECK(one.verdicts[0].check_id == "tutorial.hodge");
    CHECK(one.verdicts[0].status == CheckStatus::Confirmed);

    // empty filter means run everything
    CHECK(run_checks("", 42).verdicts.size() == registry().size());
}

TEST_CASE("unmatched filter is a usage error") {
    CHECK_THROWS_AS(run_checks("nonexistent.*", 42), UsageError);
    CHECK_THROWS_AS(run_checks("bogus", 42), UsageError);
}

TEST_CASE("reports round-trip through stable json") {
    ReportDocument doc = run_checks("error3.*", 7);
    std::string json = to_stable_json(doc);
    ReportDocument parsed = report_from_json(json);
    CHECK(parsed == doc);
    CHECK(to_stable_json(parsed) == json);
}

TEST_CASE("repeated runs produce equal documents and identical bytes") {
    ReportDocument first = run_checks("*", 11);
    ReportDocument second = run_checks("*", 11);
    CHECK(first == second); // timing is excluded from equality
    CHECK(to_stable_json(first) == to_stable_json(second));
    CHECK(render_csv(first) == render_csv(second));
}

TEST_CASE("different seeds still confirm") {
    CHECK(run_checks("tutorial.*", 1).all_confirmed());
    CHECK(run_checks("tutorial.*", 999).all_confirmed());
}

TEST_CASE("render forms cover every verdict") {
    ReportDocument doc = run_checks("subalgebra.*", 42);

    std::string text = render_text(doc);
    std::string csv = render_csv(doc);
    for (const Verdict& v : doc.verdicts) {
        CHECK(text.find(v.check_id) != std::string::npos);
        CHECK(csv.find(v.check_id) != std::string::npos);
    }
    CHECK(text.find("summary:") != std::string::npos);

    // one csv row per verdict plus the header
    std::size_t rows = 0;
    for (char ch : csv)
        if (ch == '\n') ++rows;
    CHECK(rows == doc.verdicts.size() + 1);
}

TEST_CASE("status labels render and parse for all three states") {
    ReportDocument doc;
    doc.config_echo = "filter=synthetic";
    doc.seed = 0;
    doc.verdicts.push_back({"synthetic.ok", "claim", "x", "x", CheckStatus::Confirmed});
    doc.verdicts.push_back({"synthetic.bad", "claim", "x", "y", CheckStatus::Refuted});
    doc.verdicts.push_back({"synthetic.boom", "claim", "x", "exception", CheckStatus::Error});

    CHECK_FALSE(doc.all_confirmed());
    CHECK(doc.count(CheckStatus::Refuted) == 1);
    CHECK(doc.count(CheckStatus::Error) == 1);

    std::string json = to_stable_json(doc);
    CHECK(json.find("\"confirmed\"") != std::string::npos);
    CHECK(json.find("\"refuted\"") != std::string::npos);
    CHECK(json.find("\"error\"") != std::string::npos);
    CHECK(report_from_json(json) == doc);

    std::string text = render_text(doc);
    CHECK(text.find("[confirmed]") != std::string::npos);
    CHECK(text.find("[refuted]") != std::string::npos);
    CHECK(text.find("[error]") != std::string::npos);
}
