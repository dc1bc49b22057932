#include "zetaconst/verification.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "zetaconst/constants.hpp"
#include "zetaconst/exact_tables.hpp"
#include "zetaconst/oracles.hpp"
#include "zetaconst/sequences.hpp"
#include "zetaconst/series.hpp"
#include "zetaconst/sigma.hpp"

namespace zetaconst {

namespace {

// Deterministic generator for property checks.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational rational() {
        long num = range(-9, 9);
        long den = range(1, 9);
        return Rational(num, den);
    }
    RationalSeq sequence(std::size_t len) {
        RationalSeq s(len);
        for (auto& x : s) x = rational();
        return s;
    }
};

using CheckFn = std::function<CheckResult()>;

CheckResult ok(std::string id, std::string detail = "") { return {std::move(id), true, std::move(detail)}; }
CheckResult fail(std::string id, std::string detail) { return {std::move(id), false, std::move(detail)}; }

std::string dstr(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

// ---------------------------------------------------------------- exact ---

CheckResult check_gregory_table() {
    const char* expected[] = {"1/2", "-1/12", "1/24", "-19/720", "3/160", "-863/60480"};
    for (int n = 1; n <= 6; ++n)
        if (gregory(n).to_string() != expected[n - 1])
            return fail("gregory-table", "G_" + std::to_string(n) + " = " + gregory(n).to_string());
    return ok("gregory-table", "G_1..G_6 match");
}

CheckResult check_gregory_consistency() {
    for (std::size_t n = 1; n <= 64; ++n)
        if (gregory(n) != gregory_via_stirling(n))
            return fail("gregory-vs-stirling", "mismatch at n = " + std::to_string(n));
    return ok("gregory-vs-stirling", "exact equality for n <= 64");
}

CheckResult check_gregory_shape() {
    for (std::size_t n = 1; n <= 200; ++n) {
        Rational g = gregory(n);
        int expect_sign = (n % 2 == 1) ? 1 : -1;
        if (g.sign() != expect_sign) return fail("gregory-shape", "sign at n = " + std::to_string(n));
        if (n > 1 && !(abs(g) < abs(gregory(n - 1))))
            return fail("gregory-shape", "|G_n| not decreasing at n = " + std::to_string(n));
    }
    return ok("gregory-shape", "alternating signs, |G_n| strictly decreasing, n <= 200");
}

CheckResult check_stirling_basics() {
    for (std::size_t n = 1; n <= 30; ++n) {
        if (stirling1(n, static_cast<long>(n)) != 1)
            return fail("stirling-basics", "S1(n,n) != 1 at n = " + std::to_string(n));
        Integer first = stirling1(n, 1);
        Integer expect = factorial(static_cast<unsigned long>(n - 1));
        if (n % 2 == 0) expect = -expect;
        if (first != expect) return fail("stirling-basics", "S1(n,1) wrong at n = " + std::to_string(n));
        for (std::size_t l = 1; l <= n; ++l) {
            Integer v = stirling1(n, static_cast<long>(l));
            if (v != 0 && ((n + l) % 2 == 0) != (v > 0))
                return fail("stirling-basics", "sign of S1(" + std::to_string(n) + "," + std::to_string(l) + ")");
        }
    }
    if (stirling1(5, 0) != 0 || stirling1(5, 6) != 0 || stirling1(5, -3) != 0)
        return fail("stirling-basics", "out-of-range l must give 0");
    return ok("stirling-basics", "diagonal, first column, sign pattern, n <= 30");
}

CheckResult check_stirling_rows() {
    // Row n evaluated at x = 0..n reproduces x(x-1)...(x-n+1).
    for (std::size_t n = 1; n <= 20; ++n) {
        for (long x = 0; x <= static_cast<long>(n); ++x) {
            Integer poly = 0, xp = 1;
            for (std::size_t l = 1; l <= n; ++l) {
                xp *= x;
                poly += stirling1(n, static_cast<long>(l)) * xp;
            }
            Integer ff = 1;
            for (std::size_t j = 0; j < n; ++j) ff *= (x - static_cast<long>(j));
            if (poly != ff) return fail("stirling-rows", "row " + std::to_string(n) + " at x = " + std::to_string(x));
        }
    }
    return ok("stirling-rows", "falling-factorial rows, n <= 20");
}

CheckResult check_harmonic_bell_values() {
    if (harmonic(0, 1) != Rational(0) || harmonic(3, 1) != Rational(11, 6) || harmonic(2, 2) != Rational(5, 4))
        return fail("harmonic-values", "spot values");
    std::vector<Rational> none;
    if (bell_poly(0, none) != Rational(1)) return fail("bell-values", "P_0");
    std::vector<Rational> ones2 = {Rational(1), Rational(1)};
    std::vector<Rational> ones3 = {Rational(1), Rational(1), Rational(1)};
    if (bell_poly(2, ones2) != Rational(1) || bell_poly(3, ones3) != Rational(1))
        return fail("bell-values", "P_2(1,1), P_3(1,1,1)");
    return ok("harmonic-bell-values");
}

const std::vector<std::string>& fontana_expected() {
    static const std::vector<std::string> v = {"1/2",    "1/24",        "1/72",      "19/2880",
                                               "3/800",  "863/362880",  "275/169344"};
    return v;
}

CheckResult check_prefix_fontana() {
    SeriesResult r = gamma_fontana(7);
    for (std::size_t i = 0; i < fontana_expected().size(); ++i)
        if (r.exact_prefix[i].to_string() != fontana_expected()[i])
            return fail("prefix-fontana", "term " + std::to_string(i + 1) + " = " + r.exact_prefix[i].to_string());
    return ok("prefix-fontana", "7 terms exact");
}

CheckResult check_prefix_gamma1() {
    static const std::vector<std::string> expected = {"1/32", "5/432", "1313/207360", "42169/10368000",
                                                      "137969/48384000", "1128119/533433600"};
    SeriesResult r = gamma1_product_series(8);
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (r.exact_prefix[i].to_string() != expected[i])
            return fail("prefix-gamma1", "bracket n = " + std::to_string(i + 2) + " = " + r.exact_prefix[i].to_string());
    return ok("prefix-gamma1", "bracket terms n = 2..7 exact");
}

CheckResult check_prefix_ln2pi() {
    static const std::vector<std::string> expected = {"1/4", "1/24", "7/432", "1/120", "43/8640", "79/24192"};
    SeriesResult r = ln2pi_product_series(6);
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (r.exact_prefix[i].to_string() != expected[i])
            return fail("prefix-ln2pi", "term " + std::to_string(i + 1) + " = " + r.exact_prefix[i].to_string());
    return ok("prefix-ln2pi", "6 terms exact");
}

CheckResult check_prefix_gamma_product() {
    static const std::vector<std::string> expected = {"1/24",  "1/54",        "29/2880",
                                                      "67/10800", "1507/362880", "3121/1058400"};
    SeriesResult r = gamma_product_series(6);
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (r.exact_prefix[i].to_string() != expected[i])
            return fail("prefix-gamma-product", "term " + std::to_string(i + 1) + " = " + r.exact_prefix[i].to_string());
    return ok("prefix-gamma-product", "6 terms exact");
}

CheckResult check_kappa0_matches_fontana() {
    SeriesResult a = gamma_fontana(64);
    SeriesResult b = kappa_def_series(0, 64);
    if (a.exact_prefix != b.exact_prefix) return fail("kappa0-fontana", "prefix mismatch");
    return ok("kappa0-fontana", "kappa_0 route termwise equal to the gamma route, 64 terms");
}

CheckResult check_sigma_prefix() {
    SeriesResult r = sigma_series(1, 3);
    static const std::vector<std::string> expected = {"1/4", "1/36", "1/96"};
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (r.exact_prefix[i].to_string() != expected[i])
            return fail("sigma-prefix", "term " + std::to_string(i + 1) + " = " + r.exact_prefix[i].to_string());
    return ok("sigma-prefix", "sigma_1 terms |G_n|/(n+1): 1/4, 1/36, 1/96");
}

CheckResult check_zeta_at_zero() {
    // Inner sums sum_k (-1)^k C(n,k) vanish exactly for n >= 1.
    for (std::size_t n = 1; n <= 20; ++n) {
        Rational s(0);
        for (std::size_t k = 0; k <= n; ++k) {
            Rational t(binomial(n, k));
            if (k % 2 == 1) t = -t;
            s += t;
        }
        if (s != Rational(0)) return fail("zeta-at-zero", "inner sum n = " + std::to_string(n));
    }
    HPReal z = zeta_gregory(0.0, 50, 128);
    if (!(z == HPReal::of(Rational(-1, 2), 128))) return fail("zeta-at-zero", "value != -1/2");
    return ok("zeta-at-zero", "inner sums vanish, value exactly -1/2");
}

// ----------------------------------------------------------- identities ---

CheckResult check_transform_involution() {
    Rng rng(0x5eed5eed1ull);
    for (int it = 0; it < 100; ++it) {
        std::size_t len = static_cast<std::size_t>(rng.range(1, 12));
        RationalSeq a = rng.sequence(len);
        if (binomial_transform(binomial_transform(a)) != a)
            return fail("transform-involution", "case " + std::to_string(it));
    }
    return ok("transform-involution", "100 random rational prefixes, length <= 12");
}

CheckResult check_product_rule() {
    Rng rng(0x5eed5eed2ull);
    for (int it = 0; it < 100; ++it) {
        std::size_t len = static_cast<std::size_t>(rng.range(1, 10));
        if (!transform_product_identity_holds(rng.sequence(len), rng.sequence(len)))
            return fail("product-rule", "case " + std::to_string(it));
    }
    return ok("product-rule", "100 random pairs, length <= 10");
}

CheckResult check_binomial_average() {
    Rng rng(0x5eed5eed3ull);
    for (int it = 0; it < 100; ++it) {
        std::size_t n = static_cast<std::size_t>(rng.range(0, 8));
        RationalSeq a = rng.sequence(n + 1);
        if (!binomial_average_identity_holds(a, n))
            return fail("binomial-average", "case " + std::to_string(it));
    }
    return ok("binomial-average", "100 random cases, n <= 8");
}

CheckResult check_bell_stirling() {
    for (std::size_t n = 0; n <= 25; ++n)
        for (std::size_t m = 0; m <= n; ++m)
            if (!bell_stirling_identity_holds(n, m))
                return fail("bell-stirling", "n = " + std::to_string(n) + ", m = " + std::to_string(m));
    return ok("bell-stirling", "all m <= n <= 25, exact");
}

CheckResult check_harmonic_product_small() {
    Rng rng(0x5eed5eed4ull);
    for (int it = 0; it < 50; ++it) {
        RationalSeq a = rng.sequence(3), b = rng.sequence(3);
        RationalSeq p = harmonic_product(a, b);
        if (p[0] != a[0] * b[0]) return fail("harmonic-product-small", "(a#b)(1)");
        if (p[1] != a[1] * b[0] + a[0] * b[1] - a[1] * b[1]) return fail("harmonic-product-small", "(a#b)(2)");
        Rational e3 = a[2] * b[0] + a[0] * b[2] + Rational(2) * a[1] * b[1] - Rational(2) * a[2] * b[1] -
                      Rational(2) * a[1] * b[2] + a[2] * b[2];
        if (p[2] != e3) return fail("harmonic-product-small", "(a#b)(3)");
    }
    Rng rng2(0x5eed5eed5ull);
    for (int it = 0; it < 30; ++it) {
        std::size_t len = static_cast<std::size_t>(rng2.range(1, 8));
        RationalSeq a = rng2.sequence(len), b = rng2.sequence(len), c = rng2.sequence(len);
        if (harmonic_product(a, b) != harmonic_product(b, a))
            return fail("harmonic-product-small", "commutativity");
        if (harmonic_product(harmonic_product(a, b), c) != harmonic_product(a, harmonic_product(b, c)))
            return fail("harmonic-product-small", "associativity");
    }
    return ok("harmonic-product-small", "small-m expansions, commutativity, associativity (exact)");
}

CheckResult check_lnsq_kernel_routes() {
    for (unsigned m = 1; m <= 20; ++m) {
        HPReal a = lnsq_kernel(m, 128);
        HPReal b = lnsq_kernel_direct(m, 128);
        if (abs_diff(a, b).to_double() > 1e-30)
            return fail("lnsq-kernel-routes", "m = " + std::to_string(m) + " diff " + dstr(abs_diff(a, b).to_double()));
    }
    PrecisionPolicy pol{128};
    LnsqKernelStream stream(40, pol.inflated(40));
    for (unsigned m = 1; m <= 40; ++m) {
        HPReal s = stream.next().rounded_to(128);
        HPReal d = lnsq_kernel_direct(m, 128);
        if (abs_diff(s, d).to_double() > 1e-30)
            return fail("lnsq-kernel-routes", "stream m = " + std::to_string(m));
    }
    return ok("lnsq-kernel-routes", "product form vs direct form, m <= 20; stream vs direct, m <= 40");
}

CheckResult check_transform_log_sigma() {
    // Transform of (ln 1, ln 2, ..., ln(m+1)) at position m+1 equals
    // sigma_m - 1/m.
    const std::size_t M = 20;
    PrecisionPolicy pol{128};
    mpfr_prec_t wp = pol.inflated(M + 1);
    RealSeq lnseq;
    for (std::size_t j = 1; j <= M + 1; ++j) lnseq.push_back(ln_int(static_cast<unsigned long>(j), wp));
    RealSeq t = binomial_transform(lnseq, 128);
    for (std::size_t m = 1; m <= M; ++m) {
        HPReal expect = sigma_closed(static_cast<unsigned>(m), 128) - HPReal::one_over(static_cast<unsigned long>(m), 128);
        if (abs_diff(t[m], expect).to_double() > 1e-30)
            return fail("transform-log-sigma", "m = " + std::to_string(m));
    }
    return ok("transform-log-sigma", "transform of ln equals sigma_m - 1/m, m <= 20");
}

CheckResult check_average_identity_log() {
    // Numeric specialization of the averaging identity for a = ln^m.
    for (unsigned m = 1; m <= 2; ++m) {
        for (std::size_t n = 1; n <= 10; ++n) {
            mpfr_prec_t wp = PrecisionPolicy{192}.inflated(n);
            HPReal lhs(wp), rhs(wp);
            for (std::size_t l = 0; l <= n; ++l) {
                HPReal t = HPReal::of(binomial(n, l), wp);
                t *= pow_si(ln_int(static_cast<unsigned long>(l + 1), wp), static_cast<long>(m), wp);
                t /= static_cast<unsigned long>(l + 1);
                if (l % 2 == 0)
                    lhs += t;
                else
                    lhs -= t;
            }
            for (std::size_t k = 1; k <= n; ++k)
                for (std::size_t l = 1; l <= k; ++l) {
                    HPReal t = HPReal::of(binomial(k, l), wp);
                    t *= pow_si(ln_int(static_cast<unsigned long>(l + 1), wp), static_cast<long>(m), wp);
                    if (l % 2 == 0)
                        rhs += t;
                    else
                        rhs -= t;
                }
            rhs /= static_cast<unsigned long>(n + 1);
            if (abs_diff(lhs, rhs).to_double() > 1e-45)
                return fail("average-identity-log", "m = " + std::to_string(m) + ", n = " + std::to_string(n));
        }
    }
    return ok("average-identity-log", "a = ln^m specialization, m in {1,2}, n <= 10");
}

CheckResult check_zeta_inner_harmonic() {
    // sum_k (-1)^k C(n,k) (k+1)^{-s} == P_{s-1}(H^{(1)}..H^{(s-1)})_{n+1}/(n+1), exact.
    for (long s = 2; s <= 4; ++s) {
        for (std::size_t n = 0; n <= 25; ++n) {
            Rational lhs(0);
            for (std::size_t k = 0; k <= n; ++k) {
                Integer den;
                mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(k + 1), static_cast<unsigned long>(s));
                Rational t = Rational(binomial(n, k)) / Rational(den);
                if (k % 2 == 1) t = -t;
                lhs += t;
            }
            std::vector<Rational> xs(static_cast<std::size_t>(s - 1));
            for (long r = 1; r < s; ++r) xs[static_cast<std::size_t>(r - 1)] = harmonic(n + 1, static_cast<unsigned>(r));
            Rational rhs = bell_poly(static_cast<std::size_t>(s - 1), xs) / Rational(static_cast<long>(n) + 1);
            if (lhs != rhs)
                return fail("zeta-inner-harmonic", "s = " + std::to_string(s) + ", n = " + std::to_string(n));
        }
    }
    return ok("zeta-inner-harmonic", "binomial inner sums vs harmonic closed form, s <= 4, n <= 25");
}

CheckResult check_duality_grid() {
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned m = 0; m <= 3; ++m) {
            if (k + m < 2 && k != m + 1) continue;
            DualityReport rep = stirling_duality_check(k, m);
            if (!rep.pass)
                return fail("duality-grid", "k = " + std::to_string(k) + ", m = " + std::to_string(m) +
                                               ", diff " + rep.abs_difference.decimal(3));
        }
    return ok("duality-grid", "all 1 <= k <= 4, 0 <= m <= 3");
}

// -------------------------------------------------------------- numeric ---

CheckResult check_registry_digits() {
    static const std::vector<std::pair<std::string, std::string>> expected = {
        {"gamma", "0.5772156649"},        {"gamma1", "-0.07281584548"},
        {"gamma2", "-0.009690363192"},    {"delta1", "-0.08106146679"},
        {"delta2", "-0.006356455908"},    {"delta3", "0.004711166862"},
        {"kappa1", "0.5290529699"},
    };
    for (const auto& [name, dec] : expected) {
        const ConstantRef& c = reference(name);
        if (c.decimal != dec || c.provenance != Provenance::paper)
            return fail("registry-digits", name + " entry");
    }
    // Derived entries against direct MPFR recomputation at higher precision.
    HPReal pi = const_pi(400);
    if (abs_diff(pi, reference("pi").value(400)).to_double() > 1e-50) return fail("registry-digits", "pi");
    HPReal two_pi = pi + pi;
    HPReal l(400);
    mpfr_log(l.raw(), two_pi.raw(), MPFR_RNDN);
    if (abs_diff(l, reference("ln2pi").value(400)).to_double() > 1e-50) return fail("registry-digits", "ln2pi");
    HPReal z2(400), z3(400);
    mpfr_zeta_ui(z2.raw(), 2, MPFR_RNDN);
    mpfr_zeta_ui(z3.raw(), 3, MPFR_RNDN);
    if (abs_diff(z2, reference("zeta2").value(400)).to_double() > 1e-50) return fail("registry-digits", "zeta2");
    if (abs_diff(z3, reference("zeta3").value(400)).to_double() > 1e-50) return fail("registry-digits", "zeta3");
    bool threw = false;
    try {
        reference("no-such-constant");
    } catch (const UnknownConstantError&) {
        threw = true;
    }
    if (!threw) return fail("registry-digits", "unknown name must raise the not-found error");
    return ok("registry-digits", "printed digits verbatim; derived entries recomputed");
}

CheckResult check_relation_web() {
    for (const auto& id : relation_ids()) {
        RelationReport rep = relation_check(id);
        if (rep.abs_difference.to_double() > 1e-9)
            return fail("relation-web", id + " diff " + rep.abs_difference.decimal(3));
    }
    return ok("relation-web", "all relations within 1e-9 of the printed digits");
}

CheckResult check_sigma_closed_props() {
    HPReal s1 = sigma_closed(1, 128);
    HPReal expect = HPReal::of(1l, 160) - ln_int(2, 160);
    if (abs_diff(s1, expect).to_double() > 1e-20) return fail("sigma-closed", "sigma_1 vs 1 - ln 2");
    HPReal prev(128);
    for (unsigned k = 1; k <= 30; ++k) {
        HPReal s = sigma_closed(k, 128);
        if (!(s.sign() > 0) || !(s < HPReal::of(1l, 128)))
            return fail("sigma-closed", "sigma_k not in (0,1) at k = " + std::to_string(k));
        if (k > 1 && !(s < prev)) return fail("sigma-closed", "not decreasing at k = " + std::to_string(k));
        prev = s;
        // doubling the inflation must not move the value
        mpfr_prec_t doubled = 128 + 2 * PrecisionPolicy::extra_bits(k);
        HPReal shi = sigma_closed(k, static_cast<mpfr_prec_t>(doubled)).rounded_to(128);
        if (abs_diff(s, shi).to_double() > std::pow(2.0, -126))
            return fail("sigma-closed", "inflation sensitivity at k = " + std::to_string(k));
    }
    return ok("sigma-closed", "sigma_1 = 1 - ln 2 to 1e-20; positive, decreasing, inflation-stable, k <= 30");
}

CheckResult check_sigma_consistency_quick() {
    for (unsigned k = 1; k <= 10; ++k) {
        SeriesResult ser = sigma_series(k, 2000);
        HPReal closed = sigma_closed(k, 128);
        double diff = abs_diff(ser.partial_sum, closed).to_double();
        if (diff > ser.tail_estimate.to_double() + 1e-8)
            return fail("sigma-consistency", "k = " + std::to_string(k) + " diff " + dstr(diff));
    }
    return ok("sigma-consistency", "closed vs series at N = 2000 within tail + 1e-8, k <= 10");
}

CheckResult check_series_quick() {
    struct Case {
        const char* name;
        SeriesResult r;
    };
    std::vector<Case> cases;
    cases.push_back({"fontana", gamma_fontana(2000)});
    cases.push_back({"ln2pi-product", ln2pi_product_series(2000)});
    cases.push_back({"delta1-product", delta1_product_series(2000)});
    cases.push_back({"gamma-product", gamma_product_series(2000)});
    cases.push_back({"gamma1-product", gamma1_product_series(2000)});
    cases.push_back({"kappa-def-1", kappa_def_series(1, 2000)});
    cases.push_back({"gn-harmonic", gregory_harmonic_series(2000)});
    cases.push_back({"gn-shift", gregory_shift_series(2000)});
    for (const auto& c : cases) {
        double err = c.r.reference->abs_error.to_double();
        double bound = c.r.tail_estimate.to_double() + c.r.reference->floor;
        if (err > bound)
            return fail("series-quick", std::string(c.name) + " err " + dstr(err) + " > bound " + dstr(bound));
    }
    return ok("series-quick", "eight series at N = 2000 within their tail estimates");
}

CheckResult check_zeta_quick() {
    SeriesResult z2 = zeta_gregory_result(2, 20000);
    SeriesResult z3 = zeta_gregory_result(3, 20000);
    if (z2.reference->abs_error.to_double() > z2.tail_estimate.to_double() + 1e-6)
        return fail("zeta-quick", "s = 2 err " + z2.reference->abs_error.decimal(3));
    if (z3.reference->abs_error.to_double() > z3.tail_estimate.to_double() + 1e-6)
        return fail("zeta-quick", "s = 3 err " + z3.reference->abs_error.decimal(3));
    return ok("zeta-quick", "s = 2, 3 at N = 20000 within tail + 1e-6");
}

CheckResult check_limit_oracles_quick() {
    std::vector<std::uint64_t> cuts = {1000, 10000};
    LimitSweep sw = limit_sweep(1, cuts);
    HPReal g1 = reference("gamma1").value(192);
    HPReal d1 = reference("delta1").value(192);
    double eg_lo = abs_diff(sw.gamma_estimates[0], g1).to_double();
    double eg_hi = abs_diff(sw.gamma_estimates[1], g1).to_double();
    double ed_lo = abs_diff(sw.delta_estimates[0], d1).to_double();
    double ed_hi = abs_diff(sw.delta_estimates[1], d1).to_double();
    // error model: ln(n)/(2n) for the gamma route, 1/(12n) for delta
    if (eg_hi > 2.0 * std::log(10000.0) / 20000.0) return fail("limit-oracles", "gamma1 estimate off at n = 1e4");
    if (ed_hi > 2.0 / (12.0 * 10000.0)) return fail("limit-oracles", "delta1 estimate off at n = 1e4");
    if (!(eg_hi < eg_lo) || !(ed_hi < ed_lo)) return fail("limit-oracles", "errors not decreasing");
    return ok("limit-oracles", "finite-n estimates track gamma1/delta1; errors shrink 1e3 -> 1e4");
}

CheckResult check_second_order_quick() {
    auto [g2, d2] = second_order_kernel_pair(250);
    double eg = g2.reference->abs_error.to_double();
    double ed = d2.reference->abs_error.to_double();
    if (eg > 2e-3) return fail("second-order-quick", "gamma2 err " + dstr(eg));
    if (ed > 1e-3) return fail("second-order-quick", "delta2 err " + dstr(ed));
    return ok("second-order-quick", "gamma2/delta2 kernel series at N = 250 near the references");
}

CheckResult check_log_route_quick() {
    SeriesResult g1 = gamma_log_series(1, 300);
    SeriesResult d1 = delta_log_series(1, 300);
    double bg = g1.tail_estimate.to_double() + g1.reference->floor;
    double bd = d1.tail_estimate.to_double() + d1.reference->floor;
    if (g1.reference->abs_error.to_double() > bg) return fail("log-route-quick", "gamma1 log route");
    if (d1.reference->abs_error.to_double() > bd) return fail("log-route-quick", "delta1 log route");
    return ok("log-route-quick", "log-power routes at N = 300 within tail estimates");
}

std::vector<CheckFn> exact_checks() {
    return {check_gregory_table,  check_gregory_consistency, check_gregory_shape,
            check_stirling_basics, check_stirling_rows,      check_harmonic_bell_values,
            check_prefix_fontana,  check_prefix_gamma1,      check_prefix_ln2pi,
            check_prefix_gamma_product, check_kappa0_matches_fontana, check_sigma_prefix,
            check_zeta_at_zero};
}

std::vector<CheckFn> identity_checks() {
    return {check_transform_involution, check_product_rule,        check_binomial_average,
            check_bell_stirling,        check_harmonic_product_small, check_lnsq_kernel_routes,
            check_transform_log_sigma,  check_average_identity_log, check_zeta_inner_harmonic,
            check_duality_grid};
}

std::vector<CheckFn> numeric_checks() {
    return {check_registry_digits,  check_relation_web,          check_sigma_closed_props,
            check_sigma_consistency_quick, check_series_quick,   check_zeta_quick,
            check_limit_oracles_quick, check_second_order_quick, check_log_route_quick};
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"exact", "identities", "numeric", "all"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& suite) {
    std::vector<CheckFn> fns;
    auto append = [&fns](std::vector<CheckFn> more) {
        for (auto& f : more) fns.push_back(std::move(f));
    };
    if (suite == "exact")
        append(exact_checks());
    else if (suite == "identities")
        append(identity_checks());
    else if (suite == "numeric")
        append(numeric_checks());
    else if (suite == "all") {
        append(exact_checks());
        append(identity_checks());
        append(numeric_checks());
    } else {
        throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
    }
    std::vector<CheckResult> out;
    out.reserve(fns.size());
    for (auto& f : fns) out.push_back(f());
    return out;
}

}  // namespace zetaconst
