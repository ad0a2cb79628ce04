#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>

#include "bivector_bell/bivector_bell.h"

TEST_CASE("version and initial error state") {
    REQUIRE(bb_version() != nullptr);
    CHECK(std::strcmp(bb_version(), "1.0.0") == 0);
    REQUIRE(bb_last_error() != nullptr);
}

TEST_CASE("verify runs the full suite") {
    bb_verify_run* run = nullptr;
    REQUIRE(bb_verify("*", 42, &run) == BB_OK);
    REQUIRE(run != nullptr);
    CHECK(bb_verify_check_count(run) >= 30);
    CHECK(bb_verify_confirmed_count(run) == bb_verify_check_count(run));

    const char* json = bb_verify_render(run, "json");
    REQUIRE(json != nullptr);
    CHECK(json[0] == '{');
    const char* text = bb_verify_render(run, "text");
    REQUIRE(text != nullptr);
    CHECK(std::string(text).find("summary:") != std::string::npos);
    const char* csv = bb_verify_render(run, "csv");
    REQUIRE(csv != nullptr);
    CHECK(std::string(csv).rfind("check_id,", 0) == 0);

    CHECK(bb_verify_render(run, "xml") == nullptr);
    CHECK(bb_last_error()[0] != '\0');
    bb_verify_free(run);
}

TEST_CASE("verify filter selects subsets and rejects unknown ids") {
    bb_verify_run* run = nullptr;
    REQUIRE(bb_verify("error2.*", 42, &run) == BB_OK);
    CHECK(bb_verify_check_count(run) == 4);
    bb_verify_free(run);

    bb_verify_run* untouched = reinterpret_cast<bb_verify_run*>(0x1);
    CHECK(bb_verify("nonexistent.*", 42, &untouched) == BB_USAGE);
    CHECK(untouched == reinterpret_cast<bb_verify_run*>(0x1));
    CHECK(bb_verify(nullptr, 42, &run) == BB_OK); // null filter = run all
    bb_verify_free(run);
}

TEST_CASE("simulate sweeps angles deterministically") {
    const double thetas[3] = {0.0, M_PI / 2.0, M_PI};
    bb_simulation* sim = nullptr;
    REQUIRE(bb_simulate(BB_MODEL_LOCAL_SIGN, thetas, 3, 20000, 7, &sim) == BB_OK);
    REQUIRE(sim != nullptr);
    CHECK(bb_simulate_row_count(sim) == 3);

    double theta = 0.0, mean = 0.0, se = 0.0, quantum = 0.0;
    REQUIRE(bb_simulate_row(sim, 0, &theta, &mean, &se, &quantum) == BB_OK);
    CHECK(theta == 0.0);
    CHECK(mean == -1.0);
    CHECK(se == 0.0);
    CHECK(quantum == -1.0);
    REQUIRE(bb_simulate_row(sim, 2, &theta, &mean, &se, &quantum) == BB_OK);
    CHECK(mean == 1.0);
    CHECK(bb_simulate_row(sim, 3, &theta, &mean, &se, &quantum) == BB_USAGE);

    std::string first_json = bb_simulate_render(sim, "json");
    std::string first_csv = bb_simulate_render(sim, "csv");

    bb_simulation* again = nullptr;
    REQUIRE(bb_simulate(BB_MODEL_LOCAL_SIGN, thetas, 3, 20000, 7, &again) == BB_OK);
    CHECK(std::string(bb_simulate_render(again, "json")) == first_json);
    CHECK(std::string(bb_simulate_render(again, "csv")) == first_csv);

    bb_simulate_free(sim);
    bb_simulate_free(again);
}

TEST_CASE("simulate with the constant-outcome model means 1 everywhere") {
    const double thetas[4] = {0.1, 0.9, 1.7, 2.8};
    bb_simulation* sim = nullptr;
    REQUIRE(bb_simulate(BB_MODEL_CHRISTIAN_BIVECTOR, thetas, 4, 5000, 3, &sim) == BB_OK);
    for (size_t i = 0; i < 4; ++i) {
        double mean = 0.0, se = 0.0;
        REQUIRE(bb_simulate_row(sim, i, nullptr, &mean, &se, nullptr) == BB_OK);
        CHECK(mean == 1.0);
        CHECK(se == 0.0);
    }
    bb_simulate_free(sim);
}

TEST_CASE("simulate argument validation") {
    const double thetas[1] = {0.0};
    bb_simulation* sim = nullptr;
    CHECK(bb_simulate("bogus", thetas, 1, 100, 1, &sim) == BB_USAGE);
    CHECK(bb_simulate(BB_MODEL_LOCAL_SIGN, nullptr, 0, 100, 1, &sim) == BB_USAGE);
    CHECK(bb_simulate(BB_MODEL_LOCAL_SIGN, thetas, 1, 0, 1, &sim) == BB_USAGE);
    CHECK(bb_simulate(BB_MODEL_LOCAL_SIGN, thetas, 1, 100, 1, nullptr) == BB_USAGE);
    CHECK(bb_last_error()[0] != '\0');
}

TEST_CASE("chsh through the c api") {
    const double canonical[4] = {0.0, M_PI / 2.0, M_PI / 4.0, 3.0 * M_PI / 4.0};
    bb_chsh_run* run = nullptr;
    REQUIRE(bb_chsh(BB_MODEL_LOCAL_SIGN, canonical, 100000, 42, &run) == BB_OK);
    REQUIRE(run != nullptr);
    CHECK(std::fabs(std::fabs(bb_chsh_s_value(run)) - 2.0) <= 0.05);
    CHECK(std::fabs(std::fabs(bb_chsh_quantum_value(run)) - 2.0 * std::sqrt(2.0)) <= 1e-12);
    const char* text = bb_chsh_render(run, "text");
    REQUIRE(text != nullptr);
    CHECK(std::string(text).find("classical bound") != std::string::npos);
    bb_chsh_free(run);

    REQUIRE(bb_chsh(BB_MODEL_CHRISTIAN_BIVECTOR, canonical, 10000, 42, &run) == BB_OK);
    CHECK(bb_chsh_s_value(run) == 2.0);
    bb_chsh_free(run);

    CHECK(bb_chsh(BB_MODEL_LOCAL_SIGN, nullptr, 100, 1, &run) == BB_USAGE);
    CHECK(bb_chsh(BB_MODEL_LOCAL_SIGN, canonical, 0, 1, &run) == BB_USAGE);
}

TEST_CASE("free tolerates null") {
    bb_verify_free(nullptr);
    bb_simulate_free(nullptr);
    bb_chsh_free(nullptr);
}
