#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "zetaconst/constants.hpp"
#include "zetaconst/oracles.hpp"

using namespace zetaconst;

TEST_CASE("relation web reproduces the printed digits") {
    for (const char* id : {"delta1", "delta2", "delta3", "gamma1_from_delta", "gamma2_from_delta"}) {
        RelationReport rep = relation_check(id);
        INFO(id, " diff=", rep.abs_difference.decimal(3));
        CHECK(rep.abs_difference.to_double() < 1e-9);
        CHECK(rep.abs_difference.to_double() >= 0.0);
        CHECK(rep.weakest_input_digits >= 10);
    }
    CHECK_THROWS_AS(relation_check("delta9"), std::invalid_argument);
}

TEST_CASE("relation inputs are recorded against the weakest digit count") {
    RelationReport rep = relation_check("delta2");
    CHECK(rep.weakest_input_digits == 10);  // gamma carries 10 fractional digits
    bool has_gamma = false;
    for (const auto& in : rep.inputs) has_gamma = has_gamma || in == "gamma";
    CHECK(has_gamma);
}

TEST_CASE("limit sweep: estimates approach the constants") {
    std::vector<std::uint64_t> cuts = {1000, 10000, 100000};
    LimitSweep sw1 = limit_sweep(1, cuts);
    HPReal g1 = reference("gamma1").value(192);
    HPReal d1 = reference("delta1").value(192);
    double prev_g = 1e9, prev_d = 1e9;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        double n = static_cast<double>(cuts[i]);
        double eg = abs_diff(sw1.gamma_estimates[i], g1).to_double();
        double ed = abs_diff(sw1.delta_estimates[i], d1).to_double();
        // gamma-route error ~ ln(n)/(2n); delta-route ~ 1/(12n)
        CHECK(eg < 2.0 * std::log(n) / (2.0 * n));
        CHECK(ed < 2.0 / (12.0 * n));
        CHECK(eg < prev_g);
        CHECK(ed < prev_d);
        prev_g = eg;
        prev_d = ed;
    }
}

TEST_CASE("limit sweep order two") {
    LimitSweep sw2 = limit_sweep(2, std::vector<std::uint64_t>{1000, 10000, 100000, 1000000});
    HPReal g2 = reference("gamma2").value(192);
    HPReal d2 = reference("delta2").value(192);
    double prev_g = 1e9, prev_d = 1e9;
    for (std::size_t i = 0; i < sw2.cutoffs.size(); ++i) {
        double n = static_cast<double>(sw2.cutoffs[i]);
        double eg = abs_diff(sw2.gamma_estimates[i], g2).to_double();
        double ed = abs_diff(sw2.delta_estimates[i], d2).to_double();
        CHECK(eg < prev_g);
        CHECK(ed < prev_d);
        // gamma-route error ~ ln^2(n)/(2n); delta-route ~ 2 ln(n)/(12n)
        CHECK(eg < 2.0 * std::log(n) * std::log(n) / (2.0 * n));
        CHECK(ed < 2.0 * 2.0 * std::log(n) / (12.0 * n));
        prev_g = eg;
        prev_d = ed;
    }
    CHECK(prev_g < 1e-3);
    CHECK(prev_d < 1e-4);
}

TEST_CASE("single-point limit wrappers and argument checks") {
    HPReal e = gamma_limit_estimate(1, 2000);
    CHECK(abs_diff(e, reference("gamma1").value(128)).to_double() < 0.01);
    CHECK_THROWS_AS(limit_sweep(3, std::vector<std::uint64_t>{1000}), std::invalid_argument);
    CHECK_THROWS_AS(limit_sweep(1, std::vector<std::uint64_t>{5}), std::invalid_argument);
}

TEST_CASE("stirling duality") {
    // (1,0): both sides are the same series
    DualityReport d10 = stirling_duality_check(1, 0);
    CHECK(d10.pass);
    CHECK(d10.abs_difference.is_zero());
    // (1,1) is the classical Euler-sum instance: both sides equal zeta(3)
    DualityReport d11 = stirling_duality_check(1, 1);
    CHECK(d11.pass);
    CHECK(abs_diff(d11.lhs, reference("zeta3").value(128)).to_double() < 1e-4);
    DualityReport d21 = stirling_duality_check(2, 1);
    CHECK(d21.pass);
    DualityReport d43 = stirling_duality_check(4, 3);
    CHECK(d43.pass);
    CHECK(d43.abs_difference.to_double() < d43.combined_tail.to_double() + 1e-8);
    CHECK_THROWS_AS(stirling_duality_check(0, 3), std::invalid_argument);
}
