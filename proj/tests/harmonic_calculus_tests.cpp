#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "zetaconst/sequences.hpp"
#include "zetaconst/series.hpp"
#include "zetaconst/sigma.hpp"

using namespace zetaconst;

namespace {

struct Rng {
    std::uint64_t s;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
    RationalSeq seq(std::size_t len) {
        RationalSeq v(len);
        for (auto& x : v) x = Rational(range(-9, 9), range(1, 9));
        return v;
    }
};

}  // namespace

TEST_CASE("binomial transform basics") {
    RationalSeq constant = {Rational(7, 3), Rational(7, 3), Rational(7, 3), Rational(7, 3)};
    RationalSeq tc = binomial_transform(constant);
    CHECK(tc[0] == Rational(7, 3));
    for (std::size_t i = 1; i < tc.size(); ++i) CHECK(tc[i] == Rational(0));

    RationalSeq ramp = {Rational(1), Rational(2), Rational(3), Rational(4)};
    RationalSeq tr = binomial_transform(ramp);
    CHECK(tr == RationalSeq{Rational(1), Rational(-1), Rational(0), Rational(0)});

    CHECK_THROWS_AS(binomial_transform(RationalSeq{}), std::invalid_argument);
}

TEST_CASE("binomial transform is an involution") {
    Rng rng{0xabc123};
    for (int it = 0; it < 100; ++it) {
        RationalSeq a = rng.seq(static_cast<std::size_t>(rng.range(1, 12)));
        CHECK(binomial_transform(binomial_transform(a)) == a);
    }
}

TEST_CASE("hp binomial transform matches the exact one") {
    Rng rng{0xdef456};
    RationalSeq a = rng.seq(10);
    RealSeq ahp;
    for (const auto& x : a) ahp.push_back(HPReal::of(x, 192));
    RealSeq t = binomial_transform(ahp, 128);
    RationalSeq te = binomial_transform(a);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(abs_diff(t[i], HPReal::of(te[i], 192)).to_double() < 1e-30);
}

TEST_CASE("harmonic product small cases") {
    RationalSeq ones = {Rational(1), Rational(1), Rational(1)};
    CHECK(harmonic_product(ones, ones) == ones);

    Rng rng{0x777};
    RationalSeq a = rng.seq(2), b = rng.seq(2);
    RationalSeq p = harmonic_product(a, b);
    CHECK(p[0] == a[0] * b[0]);
    CHECK(p[1] == a[1] * b[0] + a[0] * b[1] - a[1] * b[1]);
    CHECK_THROWS_AS(harmonic_product(a, ones), std::invalid_argument);
}

TEST_CASE("hp harmonic product matches the exact one") {
    Rng rng{0x1122};
    RationalSeq a = rng.seq(6), b = rng.seq(6);
    RealSeq ahp, bhp;
    for (const auto& x : a) ahp.push_back(HPReal::of(x, 192));
    for (const auto& x : b) bhp.push_back(HPReal::of(x, 192));
    RealSeq p = harmonic_product(ahp, bhp, 128);
    RationalSeq pe = harmonic_product(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(abs_diff(p[i], HPReal::of(pe[i], 192)).to_double() < 1e-30);
}

TEST_CASE("harmonic product is commutative and associative") {
    Rng rng{0x999};
    for (int it = 0; it < 40; ++it) {
        std::size_t len = static_cast<std::size_t>(rng.range(1, 8));
        RationalSeq a = rng.seq(len), b = rng.seq(len), c = rng.seq(len);
        CHECK(harmonic_product(a, b) == harmonic_product(b, a));
        CHECK(harmonic_product(harmonic_product(a, b), c) == harmonic_product(a, harmonic_product(b, c)));
    }
}

TEST_CASE("transform turns pointwise products into harmonic products") {
    RationalSeq consts = {Rational(2), Rational(2), Rational(2)};
    CHECK(transform_product_identity_holds(consts, consts));
    RationalSeq a = {Rational(1), Rational(2), Rational(3)};
    RationalSeq b = {Rational(1), Rational(1, 2), Rational(1, 3)};
    CHECK(transform_product_identity_holds(a, b));
    Rng rng{0x31337};
    for (int it = 0; it < 100; ++it) {
        std::size_t len = static_cast<std::size_t>(rng.range(1, 10));
        CHECK(transform_product_identity_holds(rng.seq(len), rng.seq(len)));
    }
}

TEST_CASE("binomial average identity") {
    RationalSeq a0 = {Rational(3, 7)};
    CHECK(binomial_average_identity_holds(a0, 0));
    RationalSeq a = {Rational(1), Rational(2), Rational(3), Rational(4)};
    CHECK(binomial_average_identity_holds(a, 3));
    Rng rng{0x4242};
    for (int it = 0; it < 100; ++it) {
        std::size_t n = static_cast<std::size_t>(rng.range(0, 8));
        CHECK(binomial_average_identity_holds(rng.seq(n + 1), n));
    }
    CHECK_THROWS_AS(binomial_average_identity_holds(a, 5), std::invalid_argument);
}

TEST_CASE("sigma series exact prefix and convergence") {
    SeriesResult r = sigma_series(1, 3);
    REQUIRE(r.exact_prefix.size() == 3);
    CHECK(r.exact_prefix[0] == Rational(1, 4));
    CHECK(r.exact_prefix[1] == Rational(1, 36));
    CHECK(r.exact_prefix[2] == Rational(1, 96));

    // converges to the closed form within the reported tail estimate
    for (unsigned k : {1u, 5u}) {
        SeriesResult s = sigma_series(k, 3000);
        HPReal closed = sigma_closed(k, 128);
        CHECK(abs_diff(s.partial_sum, closed).to_double() < s.tail_estimate.to_double());
    }
    CHECK_THROWS_AS(sigma_series(0, 10), std::invalid_argument);
}

TEST_CASE("lnsq kernel: product route equals direct route") {
    // m = 1: both give -(ln 2)^2 = -(sigma_1 - 1)^2
    HPReal k1 = lnsq_kernel(1, 128);
    HPReal d1 = lnsq_kernel_direct(1, 128);
    HPReal expect = -sqr(ln_int(2, 192));
    CHECK(abs_diff(k1, expect).to_double() < 1e-30);
    CHECK(abs_diff(d1, expect).to_double() < 1e-30);

    for (unsigned m = 1; m <= 20; ++m)
        CHECK(abs_diff(lnsq_kernel(m, 128), lnsq_kernel_direct(m, 128)).to_double() < 1e-30);
}

TEST_CASE("lnsq kernel stream matches the single-m evaluations") {
    const std::size_t M = 40;
    PrecisionPolicy pol{128};
    LnsqKernelStream stream(M, pol.inflated(M));
    for (unsigned m = 1; m <= M; ++m) {
        HPReal s = stream.next().rounded_to(128);
        CHECK(abs_diff(s, lnsq_kernel_direct(m, 128)).to_double() < 1e-30);
    }
}

TEST_CASE("transform of ln specializes to sigma_m - 1/m") {
    const std::size_t M = 20;
    mpfr_prec_t wp = PrecisionPolicy{128}.inflated(M + 1);
    RealSeq lnseq;
    for (std::size_t j = 1; j <= M + 1; ++j) lnseq.push_back(ln_int(static_cast<unsigned long>(j), wp));
    RealSeq t = binomial_transform(lnseq, 128);
    CHECK(t[0].is_zero());
    for (std::size_t m = 1; m <= M; ++m) {
        HPReal expect = sigma_closed(static_cast<unsigned>(m), 128) - HPReal::one_over(static_cast<unsigned long>(m), 128);
        CHECK(abs_diff(t[m], expect).to_double() < 1e-30);
    }
}

TEST_CASE("log power transform stress at depth 200") {
    // deep alternating sums stay stable under the precision policy
    mpfr_prec_t wp = PrecisionPolicy{128}.inflated(200);
    auto w = log_power_transform(200, 2, wp);
    auto w_hi = log_power_transform(200, 2, wp + 200);
    for (std::size_t k = 1; k <= 200; k += 19)
        CHECK(abs_diff(w[k].rounded_to(128), w_hi[k].rounded_to(128)).to_double() < 1e-35);
}
