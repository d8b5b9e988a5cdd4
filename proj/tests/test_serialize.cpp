#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gaugedim/errors.hpp"
#include "gaugedim/serialize.hpp"

using namespace gaugedim;
using nlohmann::json;

TEST_CASE("artifact envelope round trip and determinism") {
    json config{{"kind", "e0"}, {"depth", 3}};
    json result{{"answer", 42}};
    json a = make_artifact("construct", config, 7, result);
    std::string bytes1 = a.dump(2);
    std::string bytes2 = make_artifact("construct", config, 7, result).dump(2);
    CHECK(bytes1 == bytes2);

    json parsed = parse_artifact(bytes1);
    CHECK(parsed["schema"] == kSchemaVersion);
    CHECK(parsed["command"] == "construct");
    CHECK(parsed["seed"] == 7);
    CHECK(parsed["tool"]["name"] == "gaugedim");
    CHECK(parsed["config"]["depth"] == 3);

    json bad = a;
    bad["schema"] = 99;
    CHECK_THROWS_AS(parse_artifact(bad.dump()), precondition_error);
    CHECK_THROWS_AS(parse_artifact("{\"schema\":1}"), precondition_error);
}

TEST_CASE("interval set json round trip") {
    IntervalSet set = self_similar_e0(3);
    json j = to_json(set);
    CHECK(j["denominator_power"] == 3);
    CHECK(j["intervals"].size() == 8);
    IntervalSet back = interval_set_from_json(j);
    CHECK(back.level == set.level);
    CHECK(back.nums == set.nums);
    CHECK(back.labels == set.labels);

    json broken = j;
    broken["intervals"][0][1] = broken["intervals"][0][0];
    CHECK_THROWS_AS(interval_set_from_json(broken), precondition_error);
}

TEST_CASE("profile csv layout") {
    CoveringProfile prof;
    CoveringEntry e;
    e.delta = Scale::power_of(2, 1);
    e.n_cover = 3;
    e.n_pack = 4;
    prof.entries.push_back(e);
    std::string csv = profile_csv(prof);
    CHECK(csv.find("delta,n_cover,n_cover_dense,n_pack,mode\n") == 0);
    CHECK(csv.find("0.5,3,,4,exact") != std::string::npos);
}

TEST_CASE("estimate diagnostics csv") {
    LogCountProfile lp;
    for (int l = 1; l <= 6; ++l)
        lp.entries.emplace_back(Scale::power_of(2, l), static_cast<double>(l));
    DimensionEstimate est = estimate_log_profile(lp, GaugeFamily::theta(), DimKind::upper);
    std::string csv = estimate_diagnostics_csv(est, lp);
    CHECK(csv.find("delta,count_or_k,gauge_value_log2,candidate_s,trend\n") == 0);
    CHECK(csv.find("accept") != std::string::npos);
    CHECK(csv.find("reject") != std::string::npos);

    // empty diagnostics: header-only file
    DimensionEstimate bare;
    bare.method = "loglog";
    CHECK(estimate_diagnostics_csv(bare, lp) ==
          "delta,count_or_k,gauge_value_log2,candidate_s,trend\n");
}

TEST_CASE("complexity csv and estimate json") {
    ComplexityProfile prof = synthetic_profile("ratio:1", 1, 6);
    std::string csv = complexity_csv(prof);
    CHECK(csv.find("delta,k,provenance\n") == 0);
    CHECK(csv.find("synthetic") != std::string::npos);

    DimensionEstimate est =
        gauged_dim_from_profile(prof, GaugeFamily::theta(), DimKind::upper);
    json j = to_json(est);
    CHECK(j["kind"] == "upper");
    CHECK(j["method"] == "gauged-algo");
    CHECK(j["bracket"].size() == 2);
    CHECK(j["diagnostics"].size() >= 2);
}

TEST_CASE("validation report json") {
    ValidationReport rep;
    rep.subject = "x";
    rep.checks.push_back({"a", true, "", {{"c", 1.5}}});
    rep.checks.push_back({"b", false, "s=1", {}});
    json j = to_json(rep);
    CHECK(j["all_pass"] == false);
    CHECK(j["checks"][0]["data"]["c"] == 1.5);
    CHECK(j["checks"][1]["witness"] == "s=1");
}

TEST_CASE("estimate summary csv rows") {
    LogCountProfile lp;
    for (int l = 1; l <= 6; ++l)
        lp.entries.emplace_back(Scale::power_of(2, l), 2.0 * l);
    DimensionEstimate a = estimate_log_profile(lp, GaugeFamily::theta(), DimKind::upper);
    DimensionEstimate b = loglog_slope_log_profile(lp);
    std::string csv = estimates_summary_csv({a, b});
    CHECK(csv.find("value,s_lo,s_hi,kind,method,gauge,delta_max,delta_min\n") == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    CHECK(csv.find("bisection") != std::string::npos);
    CHECK(csv.find("loglog") != std::string::npos);
}

TEST_CASE("hyperspace bounds csv") {
    HyperCoverResult r;
    r.lower = 3;
    r.upper = 8;
    r.exact = 7;
    std::string csv = hyper_bounds_csv({{Scale::of(0.3), r}});
    CHECK(csv.find("delta,lower,upper,exact\n") == 0);
    CHECK(csv.find("0.3,3,8,7") != std::string::npos);
}
