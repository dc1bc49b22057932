#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "zetaconst/constants.hpp"
#include "zetaconst/exact_tables.hpp"
#include "zetaconst/series.hpp"
#include "zetaconst/sigma.hpp"

using namespace zetaconst;

namespace {

// In-test oracle: recompute the displayed prefix terms straight from the
// exact Gregory/harmonic tables (no shared evaluator code).
Rational oracle_gamma1_bracket(std::size_t n) {
    Rational s = abs(gregory(n)) / Rational(Integer(static_cast<long>(n)) * static_cast<long>(n));
    for (std::size_t k = 1; k < n; ++k)
        s += abs(gregory(k) * gregory(n + 1 - k)) * (harmonic(n, 1) - harmonic(k, 1)) /
             Rational(static_cast<long>(n + 1 - k));
    return s;
}

Rational oracle_pair_term(std::size_t n, unsigned shift) {
    Rational inner(0);
    for (std::size_t k = 1; k <= n; ++k) inner += abs(gregory(k) * gregory(n + shift - k));
    return shift == 1 ? inner / Rational(static_cast<long>(n))
                      : Rational(2) * inner / Rational(static_cast<long>(n) + 1);
}

}  // namespace

TEST_CASE("fontana prefix matches the displayed fractions") {
    SeriesResult r = gamma_fontana(7);
    std::vector<std::string> expected = {"1/2", "1/24", "1/72", "19/2880", "3/800", "863/362880", "275/169344"};
    REQUIRE(r.exact_prefix.size() == 7);
    for (std::size_t i = 0; i < 7; ++i) CHECK(r.exact_prefix[i].to_string() == expected[i]);
    SeriesResult one = gamma_fontana(1);
    CHECK(one.partial_sum.decimal(10) == "0.5");
}

TEST_CASE("gamma1 bracket terms: displayed values and oracle recomputation") {
    SeriesResult r = gamma1_product_series(9);
    std::vector<std::string> expected = {"1/32", "5/432", "1313/207360", "42169/10368000",
                                         "137969/48384000", "1128119/533433600"};
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(r.exact_prefix[i].to_string() == expected[i]);
    for (std::size_t n = 2; n <= 9; ++n) CHECK(r.exact_prefix[n - 2] == oracle_gamma1_bracket(n));
}

TEST_CASE("ln2pi series prefix and N = 1 value") {
    SeriesResult r = ln2pi_product_series(6);
    std::vector<std::string> expected = {"1/4", "1/24", "7/432", "1/120", "43/8640", "79/24192"};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(r.exact_prefix[i].to_string() == expected[i]);
        CHECK(r.exact_prefix[i] == oracle_pair_term(i + 1, 1));
    }
    // 3/2 + 1/4 = 7/4
    SeriesResult one = ln2pi_product_series(1);
    CHECK(one.partial_sum.decimal(10) == "1.75");
}

TEST_CASE("gamma product-series prefix") {
    SeriesResult r = gamma_product_series(8);
    std::vector<std::string> expected = {"1/24", "1/54", "29/2880", "67/10800", "1507/362880", "3121/1058400"};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(r.exact_prefix[i].to_string() == expected[i]);
        CHECK(r.exact_prefix[i] == oracle_pair_term(i + 1, 2));
    }
    // n = 7 and n = 8 from the oracle only
    CHECK(r.exact_prefix[6] == oracle_pair_term(7, 2));
    CHECK(r.exact_prefix[6].to_string() == "12703/5806080");
    CHECK(r.exact_prefix[7] == oracle_pair_term(8, 2));
    CHECK(r.exact_prefix[7].to_string() == "164551/97977600");
}

TEST_CASE("first-order series track their references at N = 2500") {
    for (SeriesResult r : {gamma_fontana(2500), ln2pi_product_series(2500), delta1_product_series(2500),
                           gamma_product_series(2500), gamma1_product_series(2500)}) {
        REQUIRE(r.reference.has_value());
        double err = r.reference->abs_error.to_double();
        double bound = r.tail_estimate.to_double() + r.reference->floor;
        INFO(r.series_id, " err=", err, " bound=", bound);
        CHECK(err < bound);
    }
}

TEST_CASE("monotone-error envelope across doublings") {
    // |partial(2N) - ref| <= |partial(N) - ref| + 2 tail(2N)
    auto run = [](std::uint64_t N) {
        return std::vector<SeriesResult>{gamma_fontana(N),         ln2pi_product_series(N),
                                         delta1_product_series(N), gamma_product_series(N),
                                         gamma1_product_series(N), kappa_def_series(1, N),
                                         gregory_harmonic_series(N), gregory_shift_series(N)};
    };
    for (std::uint64_t N : {500ull, 1000ull, 2000ull}) {
        auto lo = run(N);
        auto hi = run(2 * N);
        for (std::size_t i = 0; i < lo.size(); ++i) {
            double e_lo = lo[i].reference->abs_error.to_double();
            double e_hi = hi[i].reference->abs_error.to_double();
            CHECK(e_hi <= e_lo + 2.0 * hi[i].tail_estimate.to_double() + lo[i].reference->floor);
        }
    }
}

TEST_CASE("kappa definition series") {
    SeriesResult k1 = kappa_def_series(1, 1);
    CHECK(k1.exact_prefix[0] == Rational(1, 2));
    SeriesResult km1 = kappa_def_series(-1, 3000);
    REQUIRE(km1.reference.has_value());
    CHECK(km1.reference->name == "one");
    CHECK(km1.reference->abs_error.to_double() < km1.tail_estimate.to_double());
    SeriesResult k0 = kappa_def_series(0, 64);
    SeriesResult fon = gamma_fontana(64);
    CHECK(k0.exact_prefix == fon.exact_prefix);
    CHECK_THROWS_AS(kappa_def_series(-2, 10), std::invalid_argument);
}

TEST_CASE("kappa stirling and bell routes agree termwise (exact check)") {
    // |S1(n,p+1)|/n! == P_p(H_{n-1}^{(1)}, -H_{n-1}^{(2)}, ...)/n for the
    // shifted index, so the two double series enumerate identical terms.
    for (unsigned p : {0u, 1u, 2u}) {
        for (std::size_t n = p + 1; n <= 20; ++n) {
            Rational stirling_term = Rational(abs(Integer(stirling1(n, static_cast<long>(p) + 1))),
                                              factorial(static_cast<unsigned long>(n)));
            std::vector<Rational> xs(p);
            for (unsigned r = 1; r <= p; ++r) {
                Rational h = harmonic(n - 1, r);
                xs[r - 1] = (r % 2 == 1) ? h : -h;
            }
            Rational bell_term = bell_poly(p, xs) / Rational(static_cast<long>(n));
            CHECK(stirling_term == bell_term);
        }
    }
}

TEST_CASE("kappa1 routes at reduced truncations") {
    // tight runs live in the acceptance suite; here K = 12 with small caps
    SeriesResult st = kappa_stirling_series(1, 12, 200000);
    SeriesResult be = kappa_bell_series(1, 12, 200000);
    SeriesResult eu = kappa1_euler_series(12, 200000);
    HPReal k1 = reference("kappa1").value(128);
    for (const SeriesResult* r : {&st, &be, &eu}) {
        INFO(r->series_id);
        CHECK(abs_diff(r->partial_sum, k1).to_double() < r->tail_estimate.to_double() + 1e-10);
    }
    // routes agree pairwise within combined reported tails
    CHECK(abs_diff(st.partial_sum, be.partial_sum).to_double() <
          st.tail_estimate.to_double() + be.tail_estimate.to_double());
    CHECK(abs_diff(st.partial_sum, eu.partial_sum).to_double() <
          st.tail_estimate.to_double() + eu.tail_estimate.to_double());
    CHECK_THROWS_AS(kappa_stirling_series(1, 1, 100), std::invalid_argument);
}

TEST_CASE("kappa1 euler route: K = 2 term alone overshoots with zeta(3)/2") {
    SeriesResult r = kappa1_euler_series(2, 3000000);
    HPReal half_z3 = reference("zeta3").value(128) / HPReal::of(2l, 128);
    CHECK(abs_diff(r.partial_sum, half_z3).to_double() < 1e-5);
    CHECK(r.partial_sum.to_double() == doctest::Approx(0.6010).epsilon(1e-3));
    CHECK(r.partial_sum > reference("kappa1").value(128));
}

TEST_CASE("zeta gregory representation") {
    HPReal z0 = zeta_gregory(0.0, 25, 128);
    CHECK(z0 == HPReal::of(Rational(-1, 2), 128));
    // s = -1 exercises the raw route; differences of a linear polynomial
    // vanish, leaving exactly -1/12.
    HPReal zm1 = zeta_gregory(-1.0, 30, 128);
    CHECK(abs_diff(zm1, HPReal::of(Rational(-1, 12), 128)).to_double() < 1e-30);
    // integer fast path vs raw route on moderate N
    HPReal fast = zeta_gregory(2.0, 400, 128);
    HPReal raw = zeta_gregory(2.000001, 400, 128);  // nearby non-integer, raw route
    CHECK(abs_diff(fast, raw).to_double() < 1e-4);
    SeriesResult z2 = zeta_gregory_result(2, 16000);
    CHECK(z2.reference->abs_error.to_double() < z2.tail_estimate.to_double() + 1e-6);
    CHECK_THROWS_AS(zeta_gregory(1.0, 10, 128), std::invalid_argument);
    CHECK_THROWS_AS(zeta_gregory(2.5, 10000, 128), std::invalid_argument);
}

TEST_CASE("identity series") {
    SeriesResult h2 = gregory_harmonic_series(2);
    CHECK(h2.exact_prefix[0] == Rational(1, 2));
    CHECK(h2.exact_prefix[1] == Rational(1, 16));
    SeriesResult s3 = gregory_shift_series(3);
    CHECK(s3.exact_prefix[0] == Rational(1, 12));
    CHECK(s3.exact_prefix[1] == Rational(1, 48));
    SeriesResult h = gregory_harmonic_series(5000);
    CHECK(h.reference->abs_error.to_double() < h.tail_estimate.to_double());
    CHECK(h.reference->abs_error.to_double() < 1e-4);
    SeriesResult s = gregory_shift_series(5000);
    CHECK(s.reference->abs_error.to_double() < s.tail_estimate.to_double() + s.reference->floor);
    CHECK(s.reference->abs_error.to_double() < 1e-4);
}

TEST_CASE("kappa stirling route at p = 0 collapses to the zeta column") {
    // |S1(n,1)|/n! = 1/n, so the k-th inner sum is the zeta(k) partial sum;
    // the route must land on gamma like the definition series does.
    SeriesResult r = kappa_stirling_series(0, 18, 2000000);
    CHECK(r.reference->name == "gamma");
    CHECK(r.reference->abs_error.to_double() < r.tail_estimate.to_double() + r.reference->floor);
}

TEST_CASE("kappa stirling and definition routes agree at p = 2") {
    SeriesResult st = kappa_stirling_series(2, 30, 2000000);
    SeriesResult def = kappa_def_series(2, 2000);
    double diff = abs_diff(st.partial_sum, def.partial_sum).to_double();
    CHECK(diff < st.tail_estimate.to_double() + def.tail_estimate.to_double() + 1e-6);
}

TEST_CASE("kappa bell route reaches the reference at K = 30") {
    SeriesResult be = kappa_bell_series(1, 30, 20000000);
    CHECK(be.reference->name == "kappa1");
    CHECK(be.reference->abs_error.to_double() < 1e-6);
}

TEST_CASE("second-order kernel series at N = 250") {
    auto [g2, d2] = second_order_kernel_pair(250);
    // delta2 first term: -|G_2| (ln 2)^2
    CHECK(g2.reference->name == "gamma2");
    CHECK(d2.reference->name == "delta2");
    CHECK(g2.reference->abs_error.to_double() < 1e-3);
    CHECK(d2.reference->abs_error.to_double() < 3e-4);
    auto [g2a, d2a] = second_order_kernel_pair(1, 128);
    HPReal expect = -sqr(ln_int(2, 192)) / HPReal::of(12l, 192);
    CHECK(abs_diff(d2a.partial_sum, expect).to_double() < 1e-30);
    HPReal expect_g = expect / HPReal::of(2l, 192);
    CHECK(abs_diff(g2a.partial_sum, expect_g).to_double() < 1e-30);
    CHECK_THROWS_AS(second_order_kernel_pair(10, 8), std::invalid_argument);
}

TEST_CASE("log route cross-checks the specialized series") {
    SeriesResult g1_log = gamma_log_series(1, 400);
    SeriesResult g1_prod = gamma1_product_series(3000);
    CHECK(abs_diff(g1_log.partial_sum, g1_prod.partial_sum).to_double() <
          g1_log.tail_estimate.to_double() + g1_prod.tail_estimate.to_double());
    SeriesResult d1_log = delta_log_series(1, 400);
    SeriesResult d1_prod = delta1_product_series(3000);
    CHECK(abs_diff(d1_log.partial_sum, d1_prod.partial_sum).to_double() <
          d1_log.tail_estimate.to_double() + d1_prod.tail_estimate.to_double());
    SeriesResult g2_log = gamma_log_series(2, 250);
    auto [g2_kern, d2_kern] = second_order_kernel_pair(250);
    CHECK(abs_diff(g2_log.partial_sum, g2_kern.partial_sum).to_double() < 1e-25);
    SeriesResult d2_log = delta_log_series(2, 250);
    CHECK(abs_diff(d2_log.partial_sum, d2_kern.partial_sum).to_double() < 1e-25);
    SeriesResult d3 = delta_log_series(3, 250);
    CHECK(d3.reference->name == "delta3");
    CHECK(d3.reference->abs_error.to_double() < 2e-3);
    CHECK_THROWS_AS(gamma_log_series(0, 10), std::invalid_argument);
    CHECK_THROWS_AS(delta_log_series(4, 10), std::invalid_argument);
}

TEST_CASE("delta1 product series carries the same exact terms") {
    SeriesResult d = delta1_product_series(3);
    CHECK(d.exact_prefix[0] == Rational(1, 4));
    CHECK(d.exact_prefix[2] == Rational(7, 432));
}

TEST_CASE("log route at m = 3 runs without a gamma-side reference") {
    SeriesResult g3 = gamma_log_series(3, 60);
    CHECK_FALSE(g3.reference.has_value());
    CHECK(g3.series_id == "gamma3-log");
    CHECK(g3.tail_estimate.to_double() > 0.0);
}

TEST_CASE("zeta gregory at s = 4") {
    // pi^4/90 through the order-3 harmonic inner sums
    HPReal z4 = zeta_gregory(4.0, 8000, 128);
    HPReal expect = sqr(sqr(const_pi(192))) / HPReal::of(90l, 192);
    CHECK(abs_diff(z4, expect).to_double() < tail_estimate("zeta-gregory-4", 8000).to_double());
}

TEST_CASE("tail estimate op") {
    CHECK(tail_estimate("fontana", 5000).to_double() ==
          doctest::Approx(4.0 / (5000.0 * std::log(5000.0) * std::log(5000.0))));
    CHECK(tail_estimate("kappa-def-1", 1000).to_double() ==
          doctest::Approx(4.0 / (2.0 * 1e6 * std::log(1000.0) * std::log(1000.0))));
    CHECK(tail_estimate("zeta-gregory-2", 1000).to_double() ==
          doctest::Approx(4.0 / (1000.0 * std::log(1000.0))));
    CHECK_THROWS_AS(tail_estimate("no-such-series", 10), std::invalid_argument);
}
