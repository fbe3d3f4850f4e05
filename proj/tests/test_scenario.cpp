#include "hhsmash/error.hpp"
#include "hhsmash/pipeline.hpp"
#include "hhsmash/report.hpp"
#include "hhsmash/scenario.hpp"
#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace hhs;
using json = nlohmann::ordered_json;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidArgument;
}

std::string message_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

json kp_document() { return json::parse(builtin_source("kac-paljutkin-qplane")); }

// The Kac-Paljutkin structure constants written out as an inline Hopf object.
json inline_kp(bool perturb_z) {
    const HopfAlgebra h = kac_paljutkin();
    const std::size_t n = h.dim();
    auto vec = [](const Vector& v) {
        json a = json::array();
        for (const auto& x : v)
            a.push_back(x.to_string());
        return a;
    };
    json out;
    out["labels"] = h.labels();
    out["mult"] = json::array();
    for (std::size_t a = 0; a < n; ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < n; ++b)
            row.push_back(vec(h.mult(a, b)));
        out["mult"].push_back(row);
    }
    out["unit"] = vec(h.unit_coeffs());
    out["counit"] = vec(h.counit_coeffs());
    out["comult"] = json::array();
    for (std::size_t a = 0; a < n; ++a) {
        Matrix c = h.comult(a);
        if (perturb_z && a == h.index_of("z"))
            c(h.index_of("z"), h.index_of("xz")) = Scalar(1);
        json m = json::array();
        for (std::size_t r = 0; r < n; ++r)
            m.push_back(vec(c.row_vector(r)));
        out["comult"].push_back(m);
    }
    out["antipode"] = json::array();
    for (std::size_t b = 0; b < n; ++b) {
        Vector col(n);
        for (std::size_t r = 0; r < n; ++r)
            col[r] = h.antipode_matrix()(r, b);
        out["antipode"].push_back(vec(col));
    }
    return out;
}

Scenario small(const std::string& name, unsigned weight_max) {
    Scenario s = builtin_scenario(name);
    s.params.weight_max = weight_max;
    return s;
}

} // namespace

TEST_CASE("builtin scenarios parse and validate") {
    CHECK(builtin_names().size() == 3);
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        const Scenario s = builtin_scenario(name);
        CHECK(s.name == name);
        CHECK(scenario_checks(s).all_passed());
        CHECK_NOTHROW(validate_scenario(s));
    }
    const Scenario kp = builtin_scenario("kac-paljutkin-qplane");
    CHECK(kp.kp_plane());
    CHECK(kp.params.q == Scalar(2));
    CHECK(kp.grading.has_value());
    CHECK_FALSE(builtin_scenario("trivial-qplane").kp_plane());
    CHECK(code_of([] { (void)builtin_source("nope"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("q overrides and q expressions") {
    for (long qv : {1L, 3L, -1L}) {
        const Scenario s = builtin_scenario("kac-paljutkin-qplane", Scalar(qv));
        CHECK(s.params.q == Scalar(qv));
        CHECK(s.kp_plane());
        CHECK(scenario_checks(s).all_passed());
    }
    json doc = kp_document();
    doc["q"] = "3";
    doc["action"]["z"] = json::array({json::array({"0", "1*q^1"}), json::array({"q^-1", "0"})});
    const Scenario s = parse_scenario(doc.dump());
    CHECK(s.kp_plane());
    doc["action"]["z"][0][1] = "2/3*q^2";
    CHECK(parse_scenario(doc.dump()).action[3](0, 1) == Scalar(6));
    doc["action"]["z"][0][1] = "q^x";
    CHECK(code_of([&] { (void)parse_scenario(doc.dump()); }) == ErrorCode::ParseError);
}

TEST_CASE("q must be nonzero") {
    json doc = kp_document();
    doc["q"] = "0";
    CHECK(code_of([&] { (void)parse_scenario(doc.dump()); }) == ErrorCode::ValidationError);
    CHECK(message_of([&] { (void)parse_scenario(doc.dump()); }).find("q must be nonzero") != std::string::npos);
    CHECK(code_of([] { (void)builtin_scenario("kac-paljutkin-qplane", Scalar(0)); }) == ErrorCode::ValidationError);
}

TEST_CASE("malformed documents") {
    CHECK(code_of([] { (void)parse_scenario("{not json"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { (void)parse_scenario("[]"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { (void)load_scenario("/nonexistent/scenario.json"); }) == ErrorCode::ParseError);
    auto broken = [](const std::function<void(json&)>& edit) {
        json doc = kp_document();
        edit(doc);
        return code_of([&] { (void)parse_scenario(doc.dump()); });
    };
    CHECK(broken([](json& d) { d.erase("action"); }) == ErrorCode::ParseError);
    CHECK(broken([](json& d) { d["action"]["w"] = d["action"]["x"]; }) == ErrorCode::ParseError);
    CHECK(broken([](json& d) { d["hopf"] = "unknown"; }) == ErrorCode::ParseError);
    CHECK(broken([](json& d) { d["grading"] = json::array({0, 1}); }) == ErrorCode::ParseError);
    CHECK(broken([](json& d) { d["algebra"]["q_table"] = json::array({json::array({"1"})}); }) ==
          ErrorCode::ParseError);
    CHECK(broken([](json& d) { d["weight_max"] = -1; }) == ErrorCode::ParseError);
    CHECK(broken([](json& d) { d["action"]["z"][0][0] = "1/0"; }) == ErrorCode::ParseError);
}

TEST_CASE("inline Hopf structure") {
    json doc = kp_document();
    doc["hopf"] = inline_kp(false);
    const Scenario good = parse_scenario(doc.dump());
    CHECK(good.hopf_name == "inline");
    CHECK(scenario_checks(good).all_passed());

    doc["hopf"] = inline_kp(true);
    const Scenario bad = parse_scenario(doc.dump());
    const std::string msg = message_of([&] { validate_scenario(bad); });
    CHECK(code_of([&] { validate_scenario(bad); }) == ErrorCode::ValidationError);
    CHECK(msg.find("coassociativity") != std::string::npos);
}

TEST_CASE("a broken action is reported with a witness") {
    json doc = kp_document();
    doc["action"]["z"] = json::array({json::array({"0", "2"}), json::array({"1", "0"})});
    const Scenario s = parse_scenario(doc.dump());
    const AxiomReport r = scenario_checks(s);
    CHECK_FALSE(r.all_passed());
    REQUIRE(r.first_failure() != nullptr);
    CHECK_FALSE(r.first_failure()->witness.empty());
    CHECK(code_of([&] { validate_scenario(s); }) == ErrorCode::ValidationError);

    // verify records the failure instead of throwing.
    const CohomologyReport v = run_verify(s, {});
    CHECK_FALSE(v.success);
    bool witnessed = false;
    for (const auto& c : v.checks)
        witnessed = witnessed || (!c.passed && !c.detail.empty());
    CHECK(witnessed);
    // compute validates first.
    CHECK(code_of([&] { (void)run_compute(s, {}); }) == ErrorCode::ValidationError);
}

TEST_CASE("compute report for the Kac-Paljutkin plane") {
    const CohomologyReport r = run_compute(small("kac-paljutkin-qplane", 4), {2});
    CHECK(r.success);
    CHECK(r.mode == "compute");
    CHECK(r.q == "2");
    CHECK(r.dual_dims == std::vector<std::size_t>{1, 2, 1, 0});
    REQUIRE(r.strands.size() == 7); // w = -2..4
    CHECK(r.strands.front().w == -2);
    const std::vector<std::vector<std::size_t>> inv{{0, 0, 5}, {0, 0, 0}, {3, 4, 1}, {0, 0, 0}, {4, 8, 4}, {0, 0, 0},
                                                    {7, 12, 5}};
    const std::vector<std::vector<std::size_t>> full{{0, 0, 8},  {0, 4, 4},  {4, 8, 4},  {0, 4, 4},
                                                     {8, 16, 8}, {0, 4, 4}, {12, 24, 12}};
    for (std::size_t k = 0; k < r.strands.size(); ++k) {
        CAPTURE(k);
        CHECK(r.strands[k].invariant_dims == inv[k]);
        CHECK(r.strands[k].full_dims == full[k]);
        for (std::size_t m = 0; m < 3; ++m) {
            CHECK(r.strands[k].full_basis[m].size() == full[k][m]);
            CHECK(r.strands[k].full_parity[m][0] + r.strands[k].full_parity[m][1] == full[k][m]);
        }
    }
    // Odd weights carry only the H_1 part.
    CHECK(r.strands[1].full_parity[1] == std::array<std::size_t, 2>{0, 4});
    CHECK(r.strands[2].full_parity[0] == std::array<std::size_t, 2>{4, 0});
    CHECK_FALSE(r.cup.empty());
}

TEST_CASE("the trivial Hopf algebra gives HH of the plane") {
    const CohomologyReport r = run_compute(small("trivial-qplane", 6), {});
    for (const auto& st : r.strands) {
        CHECK(st.full_dims == st.invariant_dims);
        if (st.w >= 0) {
            // The centre of the quantum (-1)-plane is spanned by u^{2i} v^{2j}.
            const std::size_t expect = st.w % 2 == 0 ? static_cast<std::size_t>(st.w / 2 + 1) : 0;
            CHECK(st.invariant_dims[0] == expect);
        }
    }
}

TEST_CASE("the centre of A#H") {
    const auto kp = make_context(builtin_scenario("kac-paljutkin-qplane"));
    const std::vector<std::size_t> hh0{3, 0, 4, 0, 7, 0, 8};
    for (unsigned d = 0; d < hh0.size(); ++d)
        CHECK(center_dimension(kp->smash(), d) == hh0[d]);
    const auto triv = make_context(builtin_scenario("trivial-qplane"));
    for (unsigned d = 0; d <= 6; ++d)
        CHECK(center_dimension(triv->smash(), d) == (d % 2 == 0 ? d / 2 + 1 : 0));
}

TEST_CASE("verify passes on every builtin and on q = 1") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        const CohomologyReport r = run_verify(small(name, 4), {2});
        for (const auto& c : r.checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.passed);
        }
        CHECK(r.success);
    }
    Scenario q1 = builtin_scenario("kac-paljutkin-qplane", Scalar(1));
    q1.params.weight_max = 4;
    CHECK(run_verify(q1, {}).success);
}

TEST_CASE("tables mode needs the Kac-Paljutkin plane") {
    CHECK(code_of([] { (void)run_tables(builtin_scenario("trivial-qplane"), {}); }) == ErrorCode::InvalidArgument);
    Scenario s = builtin_scenario("kac-paljutkin-qplane");
    s.params.index_max = 1;
    s.params.weight_max = 8;
    const CohomologyReport r = run_tables(s, {2});
    CHECK_FALSE(r.success);
    CHECK_FALSE(r.tables.empty());
    std::size_t off = 0;
    for (const auto& t : r.tables)
        off += t.matches() ? 0 : 1;
    CHECK(off > 0);
    CHECK(off < r.tables.size() / 10);
}

TEST_CASE("strand computation is deterministic across thread counts") {
    const auto ctx1 = make_context(builtin_scenario("kac-paljutkin-qplane"));
    const auto ctx2 = make_context(builtin_scenario("kac-paljutkin-qplane"));
    const auto a = compute_strands(*ctx1, -2, 4, 1);
    const auto b = compute_strands(*ctx2, -2, 4, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].w == b[k].w);
        for (std::size_t m = 0; m < a[k].full.size(); ++m) {
            CHECK(a[k].full[m].representatives == b[k].full[m].representatives);
            CHECK(a[k].invariant[m].representatives == b[k].invariant[m].representatives);
        }
    }
}

TEST_CASE("reports round-trip through JSON") {
    const CohomologyReport r = run_compute(small("kac-paljutkin-qplane", 2), {});
    const std::string text = report_to_json(r);
    const CohomologyReport back = report_from_json(text);
    CHECK(back == r);
    CHECK(report_to_json(back) == text);
    CHECK(text.back() == '\n');
    CHECK_FALSE(report_to_text(r).empty());

    const CohomologyReport v = run_verify(small("commutative-plane-swap", 2), {});
    CHECK(report_from_json(report_to_json(v)) == v);

    CHECK(code_of([] { (void)report_from_json("{}"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { (void)report_from_json("nonsense"); }) == ErrorCode::ParseError);
    // Rationals are written as strings.
    const json doc = json::parse(text);
    CHECK(doc["scenario"]["q"].is_string());
}
