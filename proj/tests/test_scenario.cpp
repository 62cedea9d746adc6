#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "euchar/bundled.hpp"
#include "euchar/report.hpp"
#include "euchar/scenario.hpp"

using namespace euchar;
using nlohmann::json;

namespace {

json minimal() {
    return json::parse(R"j({
        "id": "t",
        "field": {"builtin": "Q(sqrt,-5)"},
        "group": {"builtin": "C2"},
        "module": {"p": 2, "exponents": [1], "action": "trivial", "cyclo": "trivial"}
    })j");
}

}  // namespace

TEST_CASE("batch parsing") {
    CHECK_THROWS_AS(parse_batch("not json"), SchemaError);
    CHECK_THROWS_AS(parse_batch("[]"), SchemaError);
    CHECK_THROWS_AS(parse_batch("{\"scenarios\": []}"), SchemaError);
    CHECK_THROWS_AS(parse_batch("{\"other\": 1}"), SchemaError);
    CHECK_THROWS_AS(parse_batch("42"), SchemaError);

    auto one = parse_batch("[" + minimal().dump() + "]");
    CHECK(one.size() == 1);
    auto wrapped = parse_batch("{\"scenarios\": [" + minimal().dump() + "]}");
    CHECK(wrapped.size() == 1);
}

TEST_CASE("default outputs and summary shape") {
    auto out = evaluate_scenario(minimal(), false);
    CHECK(out.id == "t");
    CHECK(!out.discrepancy);
    const auto& rep = out.report;
    CHECK(rep["scenario_id"] == "t");
    CHECK(rep["field"]["degree"] == 2);
    CHECK(rep["field"]["signature"][0] == 0);
    CHECK(rep["field"]["signature"][1] == 1);
    CHECK(rep["module_summary"]["group"] == "C2");
    CHECK(rep["module_summary"]["trivial_action"] == true);
    CHECK(rep["module_summary"]["cyclo"] == "trivial");
    CHECK(rep["results"].contains("tate_rhs"));
    CHECK(rep["results"].contains("chi2_bound"));
    CHECK(!rep["results"].contains("chi2_exact"));
    CHECK(rep["warnings"].empty());
}

TEST_CASE("schema rejections") {
    auto bad_key = minimal();
    bad_key["surprise"] = 1;
    CHECK_THROWS_AS(evaluate_scenario(bad_key, false), SchemaError);

    auto bad_field = minimal();
    bad_field["field"] = {{"builtin", "Q(cbrt,2)"}};
    CHECK_THROWS_AS(evaluate_scenario(bad_field, false), SchemaError);

    auto bad_index = minimal();
    bad_index["S"] = json::parse(R"({"finite": [{"p": 3, "factors": [7]}]})");
    CHECK_THROWS_AS(evaluate_scenario(bad_index, false), SchemaError);

    auto exact_needs_flag = minimal();
    exact_needs_flag["outputs"] = json::array({"tate", "exact"});
    CHECK_THROWS_AS(evaluate_scenario(exact_needs_flag, false), SchemaError);

    auto ledger_needs_flag = minimal();
    ledger_needs_flag["outputs"] = json::array({"ledger"});
    ledger_needs_flag["ledger"] = json::parse(
        R"({"rows": [{"id": "x", "dims": {"h1": 0, "h2": 0}, "dim_m": 1, "trivial": true}]})");
    CHECK_THROWS_AS(evaluate_scenario(ledger_needs_flag, false), SchemaError);

    auto bad_label = minimal();
    bad_label["module"]["action"] = {{"h", json::array({json::array({1})})}};
    CHECK_THROWS_AS(evaluate_scenario(bad_label, false), SchemaError);

    auto underdetermined = minimal();
    underdetermined["group"] = {{"builtin", "Q8"}};
    underdetermined["module"]["action"] = {
        {"i", json::array({json::array({-1})})}};
    CHECK_THROWS_AS(evaluate_scenario(underdetermined, false), SchemaError);

    auto bad_exponents = minimal();
    bad_exponents["module"]["exponents"] = json::array({1, 2});
    CHECK_THROWS_AS(evaluate_scenario(bad_exponents, false), SchemaError);

    auto bad_output = minimal();
    bad_output["outputs"] = json::array({"everything"});
    CHECK_THROWS_AS(evaluate_scenario(bad_output, false), SchemaError);

    auto no_id = minimal();
    no_id.erase("id");
    CHECK_THROWS_AS(evaluate_scenario(no_id, false), SchemaError);
}

TEST_CASE("claims drive the discrepancy flag") {
    auto ok = minimal();
    ok["claims"] = {{"chi2", {{"2", 1}}}};
    ok["flags"] = {{"quotient_is_full", true}};
    ok["module"]["cyclo"] = "trivial";
    ok["outputs"] = json::array({"tate", "bound", "exact"});
    auto out = evaluate_scenario(ok, false);
    CHECK(!out.discrepancy);
    CHECK(out.report["claims_checked"][0]["match"] == true);

    auto off = ok;
    off["claims"] = {{"chi2", {{"2", 5}}}};
    auto out2 = evaluate_scenario(off, false);
    CHECK(out2.discrepancy);
    bool found = false;
    for (const auto& w : out2.report["warnings"])
        if (w.get<std::string>().rfind("DISCREPANCY:", 0) == 0) found = true;
    CHECK(found);
}

TEST_CASE("expectation machinery reports mismatches") {
    auto sc = minimal();
    sc["expect"] = {{"tate", {{"2", 7}}}};
    auto out = evaluate_scenario(sc, true);
    CHECK(!out.expect_failures.empty());

    auto ignored = evaluate_scenario(sc, false);
    CHECK(ignored.expect_failures.empty());

    sc["expect"] = {{"tate", {{"2", -1}}}, {"warnings_empty", true}};
    auto good = evaluate_scenario(sc, true);
    CHECK(good.expect_failures.empty());
}

TEST_CASE("index warnings propagate into reports") {
    auto sc = minimal();
    sc["field"] = {{"poly", json::array({3, 0, 1})}};
    auto out = evaluate_scenario(sc, false);
    bool found = false;
    for (const auto& w : out.report["warnings"])
        if (w.get<std::string>().find("index_warning") != std::string::npos)
            found = true;
    CHECK(found);
    CHECK(!out.discrepancy);
}

TEST_CASE("bundled batches match the files on disk") {
    for (const auto& name : bundled_names()) {
        std::ifstream in(std::string(SCENARIO_DIR) + "/" + name + ".json");
        REQUIRE(in.good());
        std::stringstream ss;
        ss << in.rdbuf();
        CHECK(bundled_text(name) == ss.str());
    }
    CHECK(bundled_names().size() == 5);
    CHECK_THROWS_AS(bundled_text("nope"), SchemaError);
}

TEST_CASE("text rendering covers every requested section") {
    auto batch = parse_batch(bundled_text("example1_sqrt-5"));
    ordered_json reports = ordered_json::array();
    for (const auto& sc : batch)
        reports.push_back(evaluate_scenario(sc, false).report);
    auto text = render_text(reports);
    for (const char* needle :
         {"scenario example1_sqrt-5.p2", "tate_rhs: 2^-1", "chi2_bound: 2^2",
          "tight: false", "ledger:", "whatif add [3]", "claim chi2",
          "etale_cards", "x^2 + 5"}) {
        INFO(needle);
        CHECK(text.find(needle) != std::string::npos);
    }
}

TEST_CASE("reports are deterministic") {
    auto batch = parse_batch(bundled_text("example2_sqrt-120"));
    auto a = evaluate_scenario(batch[0], false);
    auto b = evaluate_scenario(batch[0], false);
    CHECK(a.report.dump() == b.report.dump());
    CHECK(a.discrepancy);
    CHECK(b.discrepancy);
}
