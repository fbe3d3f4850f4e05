#include "hhsmash/hhsmash.h"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>

using json = nlohmann::json;

namespace {

struct Scenario {
    hhs_scenario* p = nullptr;
    ~Scenario() { hhs_scenario_free(p); }
};

struct Report {
    hhs_report* p = nullptr;
    ~Report() { hhs_report_free(p); }
};

} // namespace

TEST_CASE("builtin names") {
    const std::string names = hhs_builtin_names();
    CHECK(names.find("kac-paljutkin-qplane") != std::string::npos);
    CHECK(names.find("trivial-qplane") != std::string::npos);
    CHECK(names.find("commutative-plane-swap") != std::string::npos);
}

TEST_CASE("compute through the C interface") {
    Scenario s;
    REQUIRE(hhs_scenario_builtin("kac-paljutkin-qplane", nullptr, &s.p) == HHS_OK);
    REQUIRE(s.p != nullptr);
    CHECK(hhs_scenario_set_weight_max(s.p, 2) == HHS_OK);
    Report r;
    REQUIRE(hhs_run(s.p, HHS_MODE_COMPUTE, 2, &r.p) == HHS_OK);
    CHECK(hhs_report_success(r.p) == 1);
    const char* text = nullptr;
    REQUIRE(hhs_report_render(r.p, HHS_FORMAT_JSON, &text) == HHS_OK);
    const json doc = json::parse(text);
    CHECK(doc["mode"] == "compute");
    CHECK(doc["scenario"]["q"] == "2");
    const char* human = nullptr;
    REQUIRE(hhs_report_render(r.p, HHS_FORMAT_TEXT, &human) == HHS_OK);
    CHECK(std::string(human).find("HH") != std::string::npos);
}

TEST_CASE("q override and parse") {
    Scenario s;
    REQUIRE(hhs_scenario_builtin("kac-paljutkin-qplane", "-3/2", &s.p) == HHS_OK);
    hhs_scenario_set_weight_max(s.p, 0);
    Report r;
    REQUIRE(hhs_run(s.p, HHS_MODE_COMPUTE, 1, &r.p) == HHS_OK);
    const char* text = nullptr;
    REQUIRE(hhs_report_render(r.p, HHS_FORMAT_JSON, &text) == HHS_OK);
    CHECK(json::parse(text)["scenario"]["q"] == "-3/2");

    Scenario bad;
    CHECK(hhs_scenario_builtin("kac-paljutkin-qplane", "abc", &bad.p) == HHS_INPUT_ERROR);
    CHECK(bad.p == nullptr);
    CHECK(std::string(hhs_last_error()).find("ParseError") != std::string::npos);
    CHECK(hhs_scenario_builtin("kac-paljutkin-qplane", "0", &bad.p) == HHS_INPUT_ERROR);
    CHECK(std::string(hhs_last_error()).find("q must be nonzero") != std::string::npos);
}

TEST_CASE("input errors") {
    Scenario s;
    CHECK(hhs_scenario_parse("{oops", nullptr, &s.p) == HHS_INPUT_ERROR);
    CHECK(s.p == nullptr);
    CHECK(std::string(hhs_last_error()).find("ParseError") != std::string::npos);
    CHECK(hhs_scenario_load("/nonexistent.json", nullptr, &s.p) == HHS_INPUT_ERROR);
    CHECK(hhs_scenario_builtin("nope", nullptr, &s.p) == HHS_INPUT_ERROR);
    CHECK(hhs_scenario_builtin(nullptr, nullptr, &s.p) == HHS_INPUT_ERROR);
    CHECK(hhs_scenario_builtin("trivial-qplane", nullptr, nullptr) == HHS_INPUT_ERROR);
    CHECK(hhs_run(nullptr, HHS_MODE_COMPUTE, 1, nullptr) == HHS_INPUT_ERROR);
    CHECK(hhs_scenario_set_weight_max(nullptr, 3) == HHS_INPUT_ERROR);
    CHECK(hhs_report_render(nullptr, HHS_FORMAT_JSON, nullptr) == HHS_INPUT_ERROR);
    CHECK(hhs_report_success(nullptr) == 0);
    hhs_scenario_free(nullptr);
    hhs_report_free(nullptr);

    // Tables mode on a scenario it does not apply to.
    REQUIRE(hhs_scenario_builtin("trivial-qplane", nullptr, &s.p) == HHS_OK);
    Report r;
    CHECK(hhs_run(s.p, HHS_MODE_TABLES, 1, &r.p) == HHS_INPUT_ERROR);
    CHECK(r.p == nullptr);
}

TEST_CASE("verify failures still produce a report") {
    json doc = json::parse(R"({
      "name": "broken",
      "q": "2",
      "weight_max": 2,
      "algebra": {"generators": ["u", "v"], "q_table": [["1", "-1"], ["-1", "1"]]},
      "hopf": "kac-paljutkin",
      "action": {"x": [["1","0"],["0","1"]], "y": [["1","0"],["0","1"]], "z": [["0","2"],["1","0"]]}
    })");
    const std::string path = "capi_broken_scenario.json";
    {
        std::ofstream f(path);
        f << doc.dump();
    }
    Scenario s;
    REQUIRE(hhs_scenario_load(path.c_str(), nullptr, &s.p) == HHS_OK);
    std::remove(path.c_str());
    Report r;
    CHECK(hhs_run(s.p, HHS_MODE_VERIFY, 1, &r.p) == HHS_VERIFY_FAILED);
    REQUIRE(r.p != nullptr);
    CHECK(hhs_report_success(r.p) == 0);
    Report c;
    CHECK(hhs_run(s.p, HHS_MODE_COMPUTE, 1, &c.p) == HHS_INPUT_ERROR);
    CHECK(c.p == nullptr);
    CHECK(std::string(hhs_last_error()).find("ValidationError") != std::string::npos);
}

TEST_CASE("rendering is identical across thread counts") {
    std::string outputs[2];
    const unsigned threads[2] = {1, 4};
    for (int k = 0; k < 2; ++k) {
        Scenario s;
        REQUIRE(hhs_scenario_builtin("kac-paljutkin-qplane", nullptr, &s.p) == HHS_OK);
        hhs_scenario_set_weight_max(s.p, 3);
        Report r;
        REQUIRE(hhs_run(s.p, HHS_MODE_COMPUTE, threads[k], &r.p) == HHS_OK);
        const char* text = nullptr;
        REQUIRE(hhs_report_render(r.p, HHS_FORMAT_JSON, &text) == HHS_OK);
        outputs[k] = text;
    }
    CHECK(outputs[0] == outputs[1]);
}
