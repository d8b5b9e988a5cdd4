#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gaugedim/errors.hpp"
#include "gaugedim/gauge.hpp"
#include "oracles.hpp"

using namespace gaugedim;

namespace {

std::vector<double> geometric_deltas(int count) {
    std::vector<double> v;
    for (int i = 1; i <= count; ++i) v.push_back(std::exp2(-i));
    return v;
}

} // namespace

TEST_CASE("canonical family theta") {
    GaugeFamily theta = GaugeFamily::theta();
    CHECK(theta.eval(2.0, 0.5).value == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(theta.eval(1.0, 0.37).value == doctest::Approx(0.37).epsilon(1e-15));
    // hand arithmetic: 0.0625^0.5 = 0.25
    CHECK(theta.eval(0.5, 0.0625).value == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(theta.descriptor() == "theta");
}

TEST_CASE("gauge function member view") {
    GaugeFunction f = GaugeFamily::theta().member(2.0);
    CHECK(f.eval(0.5).value == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(f.parameter() == 2.0);
    CHECK(f.descriptor() == "theta[s=2]");
    CHECK_THROWS_AS(GaugeFamily::theta().member(0.0), precondition_error);
}

TEST_CASE("evaluation preconditions") {
    GaugeFamily theta = GaugeFamily::theta();
    CHECK_THROWS_AS(theta.log2_eval(1.0, 0.0), precondition_error);
    CHECK_THROWS_AS(theta.log2_eval(1.0, -1.0), precondition_error);
    CHECK_THROWS_AS(theta.log2_eval(0.0, 0.5), precondition_error);
}

TEST_CASE("jump of theta") {
    GaugeFamily jt = GaugeFamily::jump_of(GaugeFamily::theta());
    CHECK(jt.eval(1.0, 0.5).value == doctest::Approx(0.25).epsilon(1e-15));
    // 2^-10 at delta = 0.1
    CHECK(jt.eval(1.0, 0.1).value == doctest::Approx(9.765625e-4).epsilon(1e-12));
    CHECK(jt.descriptor() == "jump(theta)");

    // log2(jump phi) = -1/phi exactly in log space
    for (double s : {0.5, 1.0, 2.0})
        for (double d : {0.9, 0.5, 0.1, 0.01}) {
            double expect = -1.0 / std::pow(d, s);
            CHECK(jt.log2_eval(s, d) == doctest::Approx(expect).epsilon(1e-12));
        }
}

TEST_CASE("jump underflow is flagged, not silent zero") {
    GaugeFamily jt = GaugeFamily::jump_of(GaugeFamily::theta());
    LinearValue v = jt.eval(2.0, 1e-3); // 2^-1e6
    CHECK(v.value == 0.0);
    CHECK(v.underflow);
    // log2 stays finite and usable
    CHECK(jt.log2_eval(2.0, 1e-3) == doctest::Approx(-1e6).epsilon(1e-9));
}

TEST_CASE("double jump saturates in log space without NaN") {
    GaugeFamily jj = GaugeFamily::jump_of(GaugeFamily::jump_of(GaugeFamily::theta()));
    long double l = jj.log2_eval_l(1.0, 0.01); // -2^(10^2)
    CHECK(l < -1e29L);
    CHECK(!std::isnan(static_cast<double>(l)));
    // deep enough to leave even long double range: still well-defined (-inf)
    long double deep = jj.log2_eval_l(3.0, 1e-4);
    CHECK(deep == -std::numeric_limits<long double>::infinity());
}

TEST_CASE("descriptor grammar") {
    CHECK(GaugeFamily::parse("theta").descriptor() == "theta");
    CHECK(GaugeFamily::parse("jump(theta)").descriptor() == "jump(theta)");
    CHECK(GaugeFamily::parse("jump(jump(theta))").descriptor() == "jump(jump(theta))");
    CHECK(GaugeFamily::parse(" pow( 2.5 ) ").eval(1.0, 0.5).value ==
          doctest::Approx(std::pow(0.5, 2.5)).epsilon(1e-14));
    CHECK_THROWS_AS(GaugeFamily::parse("zeta"), precondition_error);
    CHECK_THROWS_AS(GaugeFamily::parse("pow(-1)"), precondition_error);
    CHECK_THROWS_AS(GaugeFamily::parse("jump(theta"), precondition_error);
}

TEST_CASE("jump log identity on random triples") {
    // log2(2^K * jump(phi)_s(delta)) == (K*phi_s(delta) - 1)/phi_s(delta)
    GaugeFamily theta = GaugeFamily::theta();
    GaugeFamily jt = GaugeFamily::jump_of(theta);
    oracles::Rng rng(2024);
    for (int i = 0; i < 20000; ++i) {
        double K = rng.uniform() * 100.0;
        double s = 0.1 + rng.uniform() * 3.9;
        double d = 1e-4 + rng.uniform() * 0.5;
        double lhs = K + jt.log2_eval(s, d);
        double phi = std::exp2(theta.log2_eval(s, d));
        double rhs = (K * phi - 1.0) / phi;
        double denom = std::max({1.0, std::fabs(K), 1.0 / phi});
        CHECK(std::fabs(lhs - rhs) / denom <= 1e-12);
    }
}

TEST_CASE("jump smallness: jump(phi)/phi decreasing to zero") {
    GaugeFamily theta = GaugeFamily::theta();
    GaugeFamily jt = GaugeFamily::jump_of(theta);
    for (double s : {0.5, 1.0, 2.0}) {
        double prev = std::numeric_limits<double>::infinity();
        double last = 0;
        for (int j = 1; j <= 30; ++j) {
            double d = std::exp2(-j);
            double ratio_log2 = jt.log2_eval(s, d) - theta.log2_eval(s, d);
            CHECK(ratio_log2 < prev);
            prev = ratio_log2;
            last = ratio_log2;
        }
        CHECK(last < -1e3);
    }
}

TEST_CASE("theta doubling: theta_t(2d)/theta_s(d) -> 0 for t > s") {
    GaugeFamily theta = GaugeFamily::theta();
    for (auto [s, t] : std::vector<std::pair<double, double>>{{0.5, 1.0}, {1.0, 2.0}}) {
        double prev = std::numeric_limits<double>::infinity();
        for (int j = 2; j <= 40; ++j) {
            double d = std::exp2(-j);
            double log2_ratio = theta.log2_eval(t, 2 * d) - theta.log2_eval(s, d);
            CHECK(log2_ratio < prev);
            prev = log2_ratio;
        }
        CHECK(prev < -15.0);
    }
}

TEST_CASE("validate_gauge_family: theta and jump(theta) pass") {
    auto deltas = geometric_deltas(20);
    std::vector<double> s_grid{0.5, 1.0, 2.0};
    ValidationReport r1 = validate_gauge_family(GaugeFamily::theta(), s_grid, deltas);
    CHECK(r1.all_pass());
    ValidationReport r2 =
        validate_gauge_family(GaugeFamily::jump_of(GaugeFamily::theta()), s_grid, deltas);
    CHECK(r2.all_pass());
}

TEST_CASE("validate_gauge_family: constant-in-delta family fails vanish surrogate") {
    GaugeFamily constant = GaugeFamily::custom(
        "const-in-delta", [](double s, double) { return std::log2(static_cast<long double>(s)); });
    ValidationReport rep =
        validate_gauge_family(constant, {0.5, 1.0, 2.0}, geometric_deltas(20));
    CHECK(!rep.all_pass());
    const CheckItem* vanish = rep.find("vanishes_at_zero_surrogate");
    REQUIRE(vanish != nullptr);
    CHECK(!vanish->pass);
    CHECK(!vanish->witness.empty());
}

TEST_CASE("validator records one-sided continuity separately") {
    // right-continuous step at delta = 0.3: left limit differs
    GaugeFamily step = GaugeFamily::custom("step", [](double s, double d) {
        long double base = s * std::log2(static_cast<long double>(d));
        return d >= 0.3 ? base + 1.0L : base;
    });
    std::vector<double> sched{0.8, 0.3, 0.2, 0.1, 0.05, 0.02};
    ValidationReport rep = validate_gauge_family(step, {1.0}, sched);
    const CheckItem* left = rep.find("continuity_left");
    const CheckItem* right = rep.find("continuity_right");
    const CheckItem* two = rep.find("continuity_two_sided");
    REQUIRE((left && right && two));
    CHECK(!left->pass);
    CHECK(right->pass);
    CHECK(!two->pass);
    CHECK(two->data.at("one_sided_only") == 1.0);
}

TEST_CASE("canonical precision family") {
    PrecisionFamily alpha = canonical_precision(1.0);
    CHECK(alpha.alpha(1.0, 3) == doctest::Approx(0.125).epsilon(1e-15)); // 1/8
    CHECK(alpha.alpha(2.0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(alpha.exact_at(1.0, 3));
    CHECK(!alpha.exact_at(0.3, 1));
    CHECK_THROWS_AS(canonical_precision(0.0), precondition_error);
    CHECK_THROWS_AS(alpha.log2_alpha(1.0, -1), precondition_error);
}

TEST_CASE("precision validation: canonical passes with geometric tail") {
    PrecisionFamily alpha = PrecisionFamily::canonical();
    ValidationReport rep =
        validate_precision_family(alpha, GaugeFamily::theta(), {{1.0, 2.0}}, 40);
    CHECK(rep.all_pass());
    const CheckItem* cross = rep.find("cross_sum_cauchy (s=1,t=2)");
    REQUIRE(cross != nullptr);
    // partial sums of 2^-r: closed form 1/(1 - 2^{-s(t-s)}) = 2
    CHECK(std::fabs(cross->data.at("partial_sum") - 2.0) <= std::exp2(-39));
    CHECK(cross->data.at("last_increment") <= std::exp2(-39));
}

TEST_CASE("precision validation: harmonic alpha flagged non-Cauchy") {
    PrecisionFamily alpha = PrecisionFamily::custom(
        "alpha(s,r)=1/(r+1)",
        [](double, int r) { return -std::log2(static_cast<double>(r + 1)); });
    ValidationReport rep =
        validate_precision_family(alpha, GaugeFamily::theta(), {{1.0, 2.0}}, 40);
    CHECK(!rep.all_pass());
    const CheckItem* cross = rep.find("cross_sum_cauchy (s=1,t=2)");
    REQUIRE(cross != nullptr);
    CHECK(!cross->pass);
    CHECK(cross->witness.find("non-Cauchy") != std::string::npos);
}

TEST_CASE("precision validation preconditions") {
    PrecisionFamily alpha = PrecisionFamily::canonical();
    CHECK_THROWS_AS(validate_precision_family(alpha, GaugeFamily::theta(), {{1.0, 2.0}}, 0),
                    precondition_error);
    CHECK_THROWS_AS(validate_precision_family(alpha, GaugeFamily::theta(), {{2.0, 1.0}}, 10),
                    precondition_error);
}

TEST_CASE("family ordering invariant sampled") {
    // phi_s(d)/phi_t(d) -> 0 monotonically for s > t along descending deltas
    GaugeFamily theta = GaugeFamily::theta();
    double prev = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= 24; ++j) {
        double d = std::exp2(-j);
        double log2_ratio = theta.log2_eval(2.0, d) - theta.log2_eval(1.0, d);
        CHECK(log2_ratio < prev);
        prev = log2_ratio;
    }
    CHECK(prev < -20);
}
