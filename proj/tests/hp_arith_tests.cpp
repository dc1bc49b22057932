#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "zetaconst/constants.hpp"
#include "zetaconst/hpreal.hpp"
#include "zetaconst/sigma.hpp"

using namespace zetaconst;

TEST_CASE("hpreal construction and arithmetic") {
    HPReal a = HPReal::of(3l, 128);
    HPReal b = HPReal::of(Rational(1, 3), 128);
    CHECK((a * b).to_double() == doctest::Approx(1.0));
    CHECK((a + b).precision() == 128);
    HPReal c = HPReal::of(2l, 256) / HPReal::of(7l, 128);
    CHECK(c.precision() == 256);
    CHECK(HPReal::of_decimal("-0.25", 64).to_double() == -0.25);
    CHECK_THROWS_AS(HPReal::of_decimal("zz", 64), std::invalid_argument);
    CHECK(HPReal::one_over(8, 64).to_double() == 0.125);
}

TEST_CASE("decimal rendering") {
    CHECK(HPReal::of(Rational(-1, 4), 128).decimal(10) == "-0.25");
    CHECK(HPReal::of(1234l, 64).decimal(8) == "1234");
    CHECK(HPReal::of(Rational(1, 3), 256).decimal(5) == "0.33333");
    CHECK(HPReal(64).decimal(5) == "0");
    // round-to-nearest at the requested digit count
    CHECK(HPReal::of(Rational(2, 3), 256).decimal(4) == "0.6667");
}

TEST_CASE("ln_int") {
    CHECK(ln_int(1, 128).is_zero());
    CHECK(ln_int(2, 64).to_double() == doctest::Approx(0.693147180559945).epsilon(1e-14));
    CHECK(ln_int(10, 64).to_double() == doctest::Approx(2.302585092994046).epsilon(1e-14));
    CHECK_THROWS_AS(ln_int(0, 64), std::invalid_argument);
    // error under 2 ulp: compare 64-bit result against a 256-bit recomputation
    HPReal lo = ln_int(7, 64);
    HPReal hi = ln_int(7, 256);
    CHECK(abs_diff(lo, hi).to_double() < std::ldexp(2.0, -62));
}

TEST_CASE("precision policy inflation") {
    PrecisionPolicy pol{128};
    CHECK(pol.inflated(0) == 128 + 32);
    // ceil(m log2 3) with the 1585/1000 overestimate
    CHECK(PrecisionPolicy::extra_bits(1) == 2 + 32);
    CHECK(PrecisionPolicy::extra_bits(10) == 16 + 32);
    CHECK(PrecisionPolicy::extra_bits(1000) == 1585 + 32);
    CHECK(pol.inflated(1000) == 128 + 1585 + 32);
}

TEST_CASE("sigma closed form values") {
    // k = 1: 1 - ln 2
    HPReal s1 = sigma_closed(1, 128);
    HPReal expect = HPReal::of(1l, 192) - ln_int(2, 192);
    CHECK(abs_diff(s1, expect).to_double() < 1e-25);
    // k = 2: 1/2 - 2 ln 2 + ln 3
    HPReal s2 = sigma_closed(2, 128);
    HPReal e2 = HPReal::of(Rational(1, 2), 192) - HPReal::of(2l, 192) * ln_int(2, 192) + ln_int(3, 192);
    CHECK(abs_diff(s2, e2).to_double() < 1e-25);
    CHECK(s2.to_double() == doctest::Approx(0.21232).epsilon(1e-4));
    CHECK_THROWS_AS(sigma_closed(0, 128), std::invalid_argument);
    CHECK_THROWS_AS(sigma_closed(3, 8), std::invalid_argument);
}

TEST_CASE("sigma closed form is stable under doubled inflation") {
    for (unsigned k = 1; k <= 30; ++k) {
        HPReal base = sigma_closed(k, 128);
        HPReal doubled = sigma_closed(k, 128 + 2 * PrecisionPolicy::extra_bits(k)).rounded_to(128);
        CHECK(abs_diff(base, doubled).to_double() < std::ldexp(1.0, -126));
    }
}

TEST_CASE("sigma is positive and strictly decreasing") {
    HPReal prev(128);
    for (unsigned k = 1; k <= 30; ++k) {
        HPReal s = sigma_closed(k, 128);
        CHECK(s.sign() > 0);
        CHECK(s < HPReal::of(1l, 128));
        if (k > 1) CHECK(s < prev);
        prev = s;
    }
}

TEST_CASE("registry contents") {
    const ConstantRef& g1 = reference("gamma1");
    CHECK(g1.decimal == "-0.07281584548");
    CHECK(g1.fractional_digits == 11);
    CHECK(g1.provenance == Provenance::paper);
    CHECK(reference("delta3").decimal == "0.004711166862");
    CHECK(reference("kappa1").decimal == "0.5290529699");
    CHECK(reference("zeta2").provenance == Provenance::derived_oracle);
    CHECK(reference("zeta2").fractional_digits >= 40);
    CHECK(reference("pi").fractional_digits >= 40);
    CHECK_THROWS_AS(reference("nope"), UnknownConstantError);
    CHECK(g1.uncertainty() == doctest::Approx(1e-11));
}

TEST_CASE("derived registry digits recomputed independently") {
    // pi from MPFR's own constant
    CHECK(abs_diff(const_pi(400), reference("pi").value(400)).to_double() < 1e-50);
    // zeta(2) = pi^2/6 and from the defining series with an integral tail bracket:
    //   sum_{n<=N} n^-2 + 1/(N+1) < zeta(2) < sum_{n<=N} n^-2 + 1/N
    HPReal z2 = reference("zeta2").value(256);
    HPReal pi2_6 = sqr(const_pi(256)) / HPReal::of(6l, 256);
    CHECK(abs_diff(z2, pi2_6).to_double() < 1e-50);
    const unsigned long N = 4000;
    HPReal partial(256);
    for (unsigned long n = 1; n <= N; ++n) {
        HPReal t = HPReal::one_over(n, 256);
        partial.add_mul(t, t);
    }
    CHECK(partial + HPReal::one_over(N + 1, 256) < z2);
    CHECK(z2 < partial + HPReal::one_over(N, 256));
    // zeta(3): geometric-series route sum 1/n^3 brackets similarly
    HPReal z3 = reference("zeta3").value(256);
    HPReal p3(256), t(256);
    for (unsigned long n = 1; n <= N; ++n) {
        t = HPReal::one_over(n, 256);
        t = sqr(t) * t;
        p3 += t;
    }
    // integral bracket: 1/(2(N+1)^2) < tail < 1/(2N^2)
    HPReal lo = p3 + HPReal::one_over(2 * (N + 1) * (N + 1), 256);
    HPReal hi = p3 + HPReal::one_over(2 * N * N, 256);
    CHECK(lo < z3);
    CHECK(z3 < hi);
    // ln 2pi via MPFR log of 2 pi
    HPReal tp = const_pi(400) * HPReal::of(2l, 400);
    HPReal l(400);
    mpfr_log(l.raw(), tp.raw(), MPFR_RNDN);
    CHECK(abs_diff(l, reference("ln2pi").value(400)).to_double() < 1e-50);
}
