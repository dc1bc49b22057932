#include "zetaconst/series.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "zetaconst/constants.hpp"
#include "zetaconst/exact_tables.hpp"
#include "zetaconst/gregory_hp.hpp"
#include "zetaconst/sigma.hpp"

namespace zetaconst {

namespace {

// Guard bits for plain (non-alternating) summation of N terms.
mpfr_prec_t sum_guard(std::uint64_t N) {
    return static_cast<mpfr_prec_t>(std::bit_width(N | 1)) + 32;
}

// Stable views into the per-precision |G_n| memo.
class GregoryBlock {
public:
    GregoryBlock(std::size_t n_max, mpfr_prec_t wp) : ptrs_(n_max + 1, nullptr) {
        gregory_hp_reserve(n_max, wp);
        for (std::size_t i = 1; i <= n_max; ++i) ptrs_[i] = &gregory_abs_hp(i, wp);
    }
    const HPReal& operator[](std::size_t i) const { return *ptrs_[i]; }

private:
    std::vector<const HPReal*> ptrs_;
};

void attach_named(SeriesResult& r, const std::string& name, mpfr_prec_t wp) {
    const ConstantRef& c = reference(name);
    r.reference = ReferenceComparison{name, abs_diff(r.partial_sum, c.value(wp)), c.uncertainty()};
}

void attach_custom(SeriesResult& r, std::string label, const HPReal& target, double floor) {
    r.reference = ReferenceComparison{std::move(label), abs_diff(r.partial_sum, target), floor};
}

SeriesResult make_result(std::string id, std::uint64_t N, mpfr_prec_t prec) {
    SeriesResult r;
    r.series_id = std::move(id);
    r.terms_used = N;
    r.precision_bits = prec;
    return r;
}

}  // namespace

SeriesResult gamma_fontana(std::uint64_t N, mpfr_prec_t prec) {
    if (N < 1) throw std::invalid_argument("gamma_fontana: N must be >= 1");
    mpfr_prec_t wp = prec + sum_guard(N);
    SeriesResult r = make_result("fontana", N, prec);

    Rational exact_sum(0);
    std::uint64_t ecut = std::min<std::uint64_t>(N, kGregoryExactCrossover);
    for (std::uint64_t n = 1; n <= ecut; ++n) {
        Rational t = abs(gregory(n)) / Rational(static_cast<long>(n));
        r.exact_prefix.push_back(t);
        exact_sum += t;
    }
    HPReal acc(wp);
    if (N > ecut) {
        GregoryBlock b(N, wp);
        HPReal t(wp);
        for (std::uint64_t n = ecut + 1; n <= N; ++n) {
            t = b[n];
            t /= static_cast<unsigned long>(n);
            acc += t;
        }
    }
    acc += HPReal::of(exact_sum, wp);
    r.partial_sum = acc.rounded_to(prec);
    r.tail_estimate = tail_estimate("fontana", N);
    attach_named(r, "gamma", wp);
    return r;
}

namespace {

// Shared core of the Gregory-product series. shift = 1 sums
// inner(n) = sum_k |G_k G_{n+1-k}| and divides by n; shift = 2 sums
// sum_k |G_k G_{n+2-k}| scaled by 2/(n+1). Returns per-term exact prefix
// and the full HPReal sum of terms at wp.
struct ProductParts {
    std::vector<Rational> exact_terms;
    HPReal term_sum;
};

ProductParts product_parts(std::uint64_t N, mpfr_prec_t wp, unsigned shift) {
    ProductParts parts{{}, HPReal(wp)};
    std::uint64_t ecut = std::min<std::uint64_t>(N, kGregoryExactCrossover + 1 - shift);
    Rational exact_sum(0);
    for (std::uint64_t n = 1; n <= ecut; ++n) {
        Rational inner(0);
        for (std::uint64_t k = 1; k <= n; ++k)
            inner += abs(gregory(k)) * abs(gregory(n + shift - k));
        Rational t = (shift == 1) ? inner / Rational(static_cast<long>(n))
                                  : Rational(2) * inner / Rational(static_cast<long>(n) + 1);
        parts.exact_terms.push_back(t);
        exact_sum += t;
    }
    HPReal acc(wp);
    if (N > ecut) {
        GregoryBlock b(N + shift - 1, wp);
        HPReal inner(wp);
        for (std::uint64_t n = ecut + 1; n <= N; ++n) {
            inner.set_zero();
            for (std::uint64_t k = 1; k <= n; ++k) inner.add_mul(b[k], b[n + shift - k]);
            if (shift == 1) {
                inner /= static_cast<unsigned long>(n);
            } else {
                inner *= 2ul;
                inner /= static_cast<unsigned long>(n + 1);
            }
            acc += inner;
        }
    }
    acc += HPReal::of(exact_sum, wp);
    parts.term_sum = std::move(acc);
    return parts;
}

}  // namespace

SeriesResult ln2pi_product_series(std::uint64_t N, mpfr_prec_t prec) {
    if (N < 1) throw std::invalid_argument("ln2pi_product_series: N must be >= 1");
    mpfr_prec_t wp = prec + sum_guard(N);
    SeriesResult r = make_result("ln2pi-product", N, prec);
    ProductParts parts = product_parts(N, wp, 1);
    r.exact_prefix = std::move(parts.exact_terms);
    HPReal partial = parts.term_sum + HPReal::of(Rational(3, 2), wp);
    r.partial_sum = partial.rounded_to(prec);
    r.tail_estimate = tail_estimate("ln2pi-product", N);
    attach_named(r, "ln2pi", wp);
    return r;
}

SeriesResult delta1_product_series(std::uint64_t N, mpfr_prec_t prec) {
    if (N < 1) throw std::invalid_argument("delta1_product_series: N must be >= 1");
    mpfr_prec_t wp = prec + sum_guard(N);
    SeriesResult r = make_result("delta1-product", N, prec);
    ProductParts parts = product_parts(N, wp, 1);
    r.exact_prefix = std::move(parts.exact_terms);
    HPReal partial = parts.term_sum + (HPReal::of(1l, wp) - reference("ln2pi").value(wp)) / HPReal::of(2l, wp);
    r.partial_sum = partial.rounded_to(prec);
    r.tail_estimate = tail_estimate("delta1-product", N);
    attach_named(r, "delta1", wp);
    return r;
}

SeriesResult gamma_product_series(std::uint64_t N, mpfr_prec_t prec) {
    if (N < 1) throw std::invalid_argument("gamma_product_series: N must be >= 1");
    mpfr_prec_t wp = prec + sum_guard(N);
    SeriesResult r = make_result("gamma-product", N, prec);
    ProductParts parts = product_parts(N, wp, 2);
    r.exact_prefix = std::move(parts.exact_terms);
    HPReal partial = reference("ln2pi").value(wp) * HPReal::of(2l, wp) - HPReal::of(3l, wp) - parts.term_sum;
    r.partial_sum = partial.rounded_to(prec);
    r.tail_estimate = tail_estimate("gamma-product", N);
    attach_named(r, "gamma", wp);
    return r;
}

SeriesResult gamma1_product_series(std::uint64_t N, mpfr_prec_t prec) {
    if (N < 2) throw std::invalid_argument("gamma1_product_series: N must be >= 2");
    mpfr_prec_t wp = prec + sum_guard(N);
    SeriesResult r = make_result("gamma1-product", N, prec);

    Rational exact_sum(0);
    std::uint64_t ecut = std::min<std::uint64_t>(N, kGregoryExactCrossover);
    for (std::uint64_t n = 2; n <= ecut; ++n) {
        Rational br = abs(gregory(n)) / Rational(Integer(static_cast<long>(n)) * static_cast<long>(n));
        Rational hn = harmonic(n, 1);
        for (std::uint64_t k = 1; k < n; ++k)
            br += abs(gregory(k)) * abs(gregory(n + 1 - k)) * (hn - harmonic(k, 1)) /
                  Rational(static_cast<long>(n + 1 - k));
        r.exact_prefix.push_back(br);
        exact_sum += br;
    }
    HPReal acc(wp);
    if (N > ecut) {
        GregoryBlock b(N, wp);
        std::vector<HPReal> H;  // H[n] = H_n
        H.reserve(N + 1);
        H.emplace_back(wp);
        HPReal h(wp), t(wp), inner(wp);
        for (std::uint64_t n = 1; n <= N; ++n) {
            h += HPReal::one_over(static_cast<unsigned long>(n), wp);
            H.push_back(h);
        }
        for (std::uint64_t n = ecut + 1; n <= N; ++n) {
            inner = b[n];
            inner /= static_cast<unsigned long>(n);
            inner /= static_cast<unsigned long>(n);
            for (std::uint64_t k = 1; k < n; ++k) {
                t = H[n] - H[k];
                t *= b[k];
                t *= b[n + 1 - k];
                t /= static_cast<unsigned long>(n + 1 - k);
                inner += t;
            }
            acc += inner;
        }
    }
    acc += HPReal::of(exact_sum, wp);
    HPReal partial = acc + HPReal::of(Rational(3, 2), wp) - reference("zeta2").value(wp);
    r.partial_sum = partial.rounded_to(prec);
    r.tail_estimate = tail_estimate("gamma1-product", N);
    attach_named(r, "gamma1", wp);
    return r;
}

std::pair<SeriesResult, SeriesResult> second_order_kernel_pair(std::uint64_t N, mpfr_prec_t prec) {
    if (N < 1) throw std::invalid_argument("second_order_kernel_pair: N must be >= 1");
    if (prec < 16) throw std::invalid_argument("second_order_kernel_pair: precision below 16 bits");
    mpfr_prec_t wp = PrecisionPolicy{prec}.inflated(N);
    SeriesResult g2 = make_result("gamma2-kernel", N, prec);
    SeriesResult d2 = make_result("delta2-kernel", N, prec);

    LnsqKernelStream stream(N, wp);
    GregoryBlock b(N + 1, wp);
    HPReal cum(wp), g_acc(wp), d_acc(wp), t(wp);
    for (std::uint64_t m = 1; m <= N; ++m) {
        HPReal kern = stream.next();
        cum += kern;
        t = b[m + 1];
        t *= kern;
        d_acc += t;
        t = b[m + 1];
        t *= cum;
        t /= static_cast<unsigned long>(m + 1);
        g_acc += t;
    }
    g2.partial_sum = g_acc.rounded_to(prec);
    d2.partial_sum = d_acc.rounded_to(prec);
    g2.tail_estimate = tail_estimate("gamma2-kernel", N);
    d2.tail_estimate = tail_estimate("delta2-kernel", N);
    attach_named(g2, "gamma2", wp);
    attach_named(d2, "delta2", wp);
    return {std::move(g2), std::move(d2)};
}

SeriesResult gamma2_kernel_series(std::uint64_t N, mpfr_prec_t prec) {
    return second_order_kernel_pair(N, prec).first;
}

SeriesResult delta2_kernel_series(std::uint64_t N, mpfr_prec_t prec) {
    return second_order_kernel_pair(N, prec).second;
}

namespace {

SeriesResult log_series_impl(bool cumulative, unsigned m, std::uint64_t N, mpfr_prec_t prec) {
    const char* fn = cumulative ? "gamma_log_series" : "delta_log_series";
    if (m == 0)
        throw std::invalid_argument(std::string(fn) + ": m = 0 not handled by the log route");
    if (m > 3) throw std::invalid_argument(std::string(fn) + ": m must be in {1,2,3}");
    if (N < 1) throw std::invalid_argument(std::string(fn) + ": N must be >= 1");
    std::string id = (cumulative ? "gamma" : "delta") + std::to_string(m) + "-log";
    SeriesResult r = make_result(id, N, prec);

    mpfr_prec_t wp = PrecisionPolicy{prec}.inflated(N);
    std::vector<HPReal> w = log_power_transform(N, m, wp);
    GregoryBlock b(N + 1, wp);
    HPReal acc(wp), cum(wp), t(wp);
    for (std::uint64_t n = 1; n <= N; ++n) {
        if (cumulative) {
            cum += w[n];
            t = b[n + 1];
            t *= cum;
            t /= static_cast<unsigned long>(n + 1);
        } else {
            t = b[n + 1];
            t *= w[n];
        }
        acc += t;
    }
    r.partial_sum = acc.rounded_to(prec);
    r.tail_estimate = tail_estimate(id, N);
    const char* ref_name = nullptr;
    if (cumulative) {
        if (m == 1) ref_name = "gamma1";
        if (m == 2) ref_name = "gamma2";
    } else {
        if (m == 1) ref_name = "delta1";
        if (m == 2) ref_name = "delta2";
        if (m == 3) ref_name = "delta3";
    }
    if (ref_name) attach_named(r, ref_name, wp);
    return r;
}

}  // namespace

SeriesResult gamma_log_series(unsigned m, std::uint64_t N, mpfr_prec_t prec) {
    return log_series_impl(true, m, N, prec);
}

SeriesResult delta_log_series(unsigned m, std::uint64_t N, mpfr_prec_t prec) {
    return log_series_impl(false, m, N, prec);
}

SeriesResult sigma_series(unsigned k, std::uint64_t N, mpfr_prec_t prec) {
    if (k == 0) throw std::invalid_argument("sigma_series: k must be >= 1");
    if (N < 1) throw std::invalid_argument("sigma_series: N must be >= 1");
    mpfr_prec_t wp = prec + sum_guard(N);
    SeriesResult r = make_result("sigma-series-" + std::to_string(k), N, prec);
    Rational exact_sum(0);
    std::uint64_t ecut = std::min<std::uint64_t>(N, kGregoryExactCrossover);
    for (std::uint64_t n = 1; n <= ecut; ++n) {
        Rational t = abs(gregory(n)) / Rational(static_cast<long>(n + k));
        r.exact_prefix.push_back(t);
        exact_sum += t;
    }
    HPReal acc(wp);
    if (N > ecut) {
        GregoryBlock b(N, wp);
        HPReal t(wp);
        for (std::uint64_t n = ecut + 1; n <= N; ++n) {
            t = b[n];
            t /= static_cast<unsigned long>(n + k);
            acc += t;
        }
    }
    acc += HPReal::of(exact_sum, wp);
    r.partial_sum = acc.rounded_to(prec);
    r.tail_estimate = tail_estimate(r.series_id, N);
    return r;
}

SeriesResult gregory_harmonic_series(std::uint64_t N, mpfr_prec_t prec) {
    if (N < 1) throw std::invalid_argument("gregory_harmonic_series: N must be >= 1");
    mpfr_prec_t wp = prec + sum_guard(N);
    SeriesResult r = make_result("gn-harmonic", N, prec);
    Rational exact_sum(0);
    std::uint64_t ecut = std::min<std::uint64_t>(N, kGregoryExactCrossover);
    for (std::uint64_t n = 1; n <= ecut; ++n) {
        Rational t = abs(gregory(n)) * harmonic(n, 1) / Rational(static_cast<long>(n));
        r.exact_prefix.push_back(t);
        exact_sum += t;
    }
    HPReal acc(wp);
    if (N > ecut) {
        GregoryBlock b(N, wp);
        HPReal h(wp), t(wp);
        for (std::uint64_t n = 1; n <= ecut; ++n) h += HPReal::one_over(static_cast<unsigned long>(n), wp);
        for (std::uint64_t n = ecut + 1; n <= N; ++n) {
            h += HPReal::one_over(static_cast<unsigned long>(n), wp);
            t = b[n];
            t *= h;
            t /= static_cast<unsigned long>(n);
            acc += t;
        }
    }
    acc += HPReal::of(exact_sum, wp);
    r.partial_sum = acc.rounded_to(prec);
    r.tail_estimate = tail_estimate("gn-harmonic", N);
    attach_custom(r, "zeta2-1", reference("zeta2").value(wp) - HPReal::of(1l, wp),
                  reference("zeta2").uncertainty());
    return r;
}

SeriesResult gregory_shift_series(std::uint64_t N, mpfr_prec_t prec) {
    if (N < 2) throw std::invalid_argument("gregory_shift_series: N must be >= 2");
    mpfr_prec_t wp = prec + sum_guard(N);
    SeriesResult r = make_result("gn-shift", N, prec);
    Rational exact_sum(0);
    std::uint64_t ecut = std::min<std::uint64_t>(N, kGregoryExactCrossover);
    for (std::uint64_t n = 2; n <= ecut; ++n) {
        Rational t = abs(gregory(n)) / Rational(static_cast<long>(n - 1));
        r.exact_prefix.push_back(t);
        exact_sum += t;
    }
    HPReal acc(wp);
    if (N > ecut) {
        GregoryBlock b(N, wp);
        HPReal t(wp);
        for (std::uint64_t n = ecut + 1; n <= N; ++n) {
            t = b[n];
            t /= static_cast<unsigned long>(n - 1);
            acc += t;
        }
    }
    acc += HPReal::of(exact_sum, wp);
    r.partial_sum = acc.rounded_to(prec);
    r.tail_estimate = tail_estimate("gn-shift", N);
    const ConstantRef& ln2pi = reference("ln2pi");
    const ConstantRef& gamma = reference("gamma");
    HPReal target = (ln2pi.value(wp) - gamma.value(wp) - HPReal::of(1l, wp)) / HPReal::of(2l, wp);
    attach_custom(r, "(ln2pi-gamma-1)/2", target, (gamma.uncertainty() + ln2pi.uncertainty()) / 2);
    return r;
}

SeriesResult kappa_def_series(int p, std::uint64_t N, mpfr_prec_t prec) {
    if (p < -1) throw std::invalid_argument("kappa_def_series: p must be >= -1");
    if (N < 1) throw std::invalid_argument("kappa_def_series: N must be >= 1");
    mpfr_prec_t wp = prec + sum_guard(N);
    SeriesResult r = make_result("kappa-def-" + std::to_string(p), N, prec);
    Rational exact_sum(0);
    std::uint64_t ecut = std::min<std::uint64_t>(N, kGregoryExactCrossover);
    for (std::uint64_t n = 1; n <= ecut; ++n) {
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(p + 1));
        Rational t = abs(gregory(n)) / Rational(den);
        r.exact_prefix.push_back(t);
        exact_sum += t;
    }
    HPReal acc(wp);
    if (N > ecut) {
        GregoryBlock b(N, wp);
        HPReal t(wp);
        for (std::uint64_t n = ecut + 1; n <= N; ++n) {
            t = b[n];
            for (int i = 0; i <= p; ++i) t /= static_cast<unsigned long>(n);
            acc += t;
        }
    }
    acc += HPReal::of(exact_sum, wp);
    r.partial_sum = acc.rounded_to(prec);
    r.tail_estimate = tail_estimate(r.series_id, N);
    if (p == -1)
        attach_custom(r, "one", HPReal::of(1l, wp), 0.0);
    else if (p == 0)
        attach_named(r, "gamma", wp);
    else if (p == 1)
        attach_named(r, "kappa1", wp);
    return r;
}

namespace {

// Inner-tail model for the Stirling/Bell/Euler double series:
// |S1(n,p+1)|/n! ~ ln^p(n)/(p! n), so the k-th inner tail from n = X is
// about ln^p(X) / (p! (k-1) X^{k-1}).
double kappa_inner_tail_model(unsigned p, unsigned k, double X) {
    double lf = 1.0;
    for (unsigned i = 2; i <= p; ++i) lf *= i;
    return std::pow(std::log(X), p) / (lf * (k - 1) * std::pow(X, k - 1));
}

// Derive per-k inner truncations: the k-th inner tail target halves with
// every k beyond 2, so the summed inner error stays on the order of the
// k = 2 tail instead of its harmonic multiple. Deterministic double
// arithmetic.
std::vector<std::uint64_t> kappa_schedule(unsigned p, unsigned K, std::uint64_t N) {
    std::vector<std::uint64_t> caps(K + 1, 0);
    double base = kappa_inner_tail_model(p, 2, static_cast<double>(N));
    caps[2] = N;
    double target = base;
    for (unsigned k = 3; k <= K; ++k) {
        target *= 0.5;
        std::uint64_t n = p + 2;
        while (n < N && kappa_inner_tail_model(p, k, static_cast<double>(n)) > target) n *= 2;
        caps[k] = std::min(n, N);
    }
    return caps;
}

// kappa double-series tail: outer geometric remainder plus the summed
// per-k inner models, with the standard safety factor.
HPReal kappa_double_tail(unsigned p, unsigned K, const std::vector<std::uint64_t>& caps) {
    double outer = std::pow(static_cast<double>(p + 1), -(static_cast<double>(K) - 1)) / K;
    double inner = 0.0;
    for (unsigned k = 2; k <= K; ++k)
        inner += kappa_inner_tail_model(p, k, static_cast<double>(caps[k])) / k;
    return HPReal::of(4.0 * (outer + inner), 64);
}

SeriesResult kappa_double_common(const std::string& id, unsigned p, unsigned K, std::uint64_t N,
                                 mpfr_prec_t prec, std::vector<HPReal> inner) {
    mpfr_prec_t wp = prec + sum_guard(N) + 32;
    SeriesResult r = make_result(id, K, prec);
    HPReal acc(wp), t(wp);
    for (unsigned k = 2; k <= K; ++k) {
        t = inner[k];
        t /= k;
        if (k % 2 == 1)
            acc -= t;
        else
            acc += t;
    }
    r.partial_sum = acc.rounded_to(prec);
    r.tail_estimate = kappa_double_tail(p, K, kappa_schedule(p, K, N));
    if (p == 0)
        attach_named(r, "gamma", wp);
    else if (p == 1)
        attach_named(r, "kappa1", wp);
    return r;
}

void check_kappa_args(const char* fn, unsigned K, std::uint64_t N, unsigned p) {
    if (K < 2) throw std::invalid_argument(std::string(fn) + ": outer truncation K must be >= 2");
    if (N < p + 2) throw std::invalid_argument(std::string(fn) + ": inner truncation too small");
}

}  // namespace

SeriesResult kappa_stirling_series(unsigned p, unsigned K, std::uint64_t N, mpfr_prec_t prec) {
    check_kappa_args("kappa_stirling_series", K, N, p);
    mpfr_prec_t wp = prec + sum_guard(N) + 32;
    std::vector<std::uint64_t> caps = kappa_schedule(p, K, N);

    // q[r] = |S1(n, r+1)|/n!, updated by
    // q_n(r) = (q_{n-1}(r-1) + (n-1) q_{n-1}(r))/n, all terms positive.
    std::vector<HPReal> q(p + 1, HPReal(wp));
    std::vector<HPReal> inner(K + 1, HPReal(wp));
    HPReal t(wp), carry(wp);
    for (std::uint64_t n = 1; n <= N; ++n) {
        if (n == 1) {
            q[0] = HPReal::of(1l, wp);
        } else {
            for (std::size_t r = p + 1; r-- > 0;) {
                q[r] *= static_cast<unsigned long>(n - 1);
                if (r > 0) q[r] += q[r - 1];
                q[r] /= static_cast<unsigned long>(n);
            }
        }
        if (n < p + 1) continue;  // |S1(n,p+1)| = 0 below the diagonal
        t = q[p];
        for (unsigned k = 2; k <= K && n <= caps[k]; ++k) {
            t /= static_cast<unsigned long>(n);
            inner[k] += t;
        }
    }
    return kappa_double_common("kappa-stirling-" + std::to_string(p), p, K, N, prec, std::move(inner));
}

SeriesResult kappa_bell_series(unsigned p, unsigned K, std::uint64_t N, mpfr_prec_t prec) {
    check_kappa_args("kappa_bell_series", K, N, p);
    mpfr_prec_t wp = prec + sum_guard(N) + 32;
    std::vector<std::uint64_t> caps = kappa_schedule(p, K, N);

    // H^{(r)}_n incrementally; P_j from the modified-Bell recurrence with
    // arguments x_r = (-1)^{r-1} H^{(r)}_n.
    std::vector<HPReal> h(p + 1, HPReal(wp));  // h[r] = H^{(r)}_n, r >= 1
    std::vector<HPReal> P(p + 1, HPReal(wp));
    std::vector<HPReal> inner(K + 1, HPReal(wp));
    HPReal t(wp), s(wp), pw(wp);
    for (std::uint64_t n = 1; n <= N; ++n) {
        pw = HPReal::one_over(static_cast<unsigned long>(n), wp);
        for (unsigned r = 1; r <= p; ++r) {
            h[r] += pw;
            if (r < p) pw /= static_cast<unsigned long>(n);
        }
        if (n < p) continue;
        P[0] = HPReal::of(1l, wp);
        for (unsigned j = 1; j <= p; ++j) {
            s.set_zero();
            for (unsigned i = 1; i <= j; ++i) {
                if (i % 2 == 1)
                    s.add_mul(h[i], P[j - i]);
                else
                    s.sub_mul(h[i], P[j - i]);
            }
            s /= static_cast<unsigned long>(j);
            P[j] = s;
        }
        t = P[p];
        t /= static_cast<unsigned long>(n + 1);
        for (unsigned k = 2; k <= K && n <= caps[k]; ++k) {
            t /= static_cast<unsigned long>(n + 1);
            inner[k] += t;
        }
    }
    return kappa_double_common("kappa-bell-" + std::to_string(p), p, K, N, prec, std::move(inner));
}

SeriesResult kappa1_euler_series(unsigned K, std::uint64_t N, mpfr_prec_t prec) {
    check_kappa_args("kappa1_euler_series", K, N, 1);
    mpfr_prec_t wp = prec + sum_guard(N) + 32;
    std::vector<std::uint64_t> caps = kappa_schedule(1, K, N);

    std::vector<HPReal> inner(K + 1, HPReal(wp));
    HPReal h(wp), t(wp);  // h = H_{n-1}
    for (std::uint64_t n = 2; n <= N; ++n) {
        h += HPReal::one_over(static_cast<unsigned long>(n - 1), wp);
        t = h;
        t /= static_cast<unsigned long>(n);
        for (unsigned k = 2; k <= K && n <= caps[k]; ++k) {
            t /= static_cast<unsigned long>(n);
            inner[k] += t;
        }
    }
    SeriesResult r = kappa_double_common("kappa1-euler", 1, K, N, prec, std::move(inner));
    return r;
}

namespace {

// Inner binomial sums of the Gregory zeta representation for integer
// s = m+1 >= 2, via the exact identity
//   sum_k (-1)^k C(n,k) (k+1)^{-m-1} = P_m(H^{(1)}_{n+1},...,H^{(m)}_{n+1})/(n+1).
HPReal zeta_gregory_integer(unsigned m, std::uint64_t N, mpfr_prec_t wp) {
    GregoryBlock b(N + 1, wp);
    std::vector<HPReal> h(m + 1, HPReal(wp));
    std::vector<HPReal> P(m + 1, HPReal(wp));
    HPReal acc(wp), t(wp), s(wp), pw(wp);
    for (std::uint64_t n = 0; n <= N; ++n) {
        pw = HPReal::one_over(static_cast<unsigned long>(n + 1), wp);
        for (unsigned r = 1; r <= m; ++r) {
            h[r] += pw;
            if (r < m) pw /= static_cast<unsigned long>(n + 1);
        }
        P[0] = HPReal::of(1l, wp);
        for (unsigned j = 1; j <= m; ++j) {
            s.set_zero();
            for (unsigned i = 1; i <= j; ++i) s.add_mul(h[i], P[j - i]);
            s /= static_cast<unsigned long>(j);
            P[j] = s;
        }
        t = b[n + 1];
        t *= P[m];
        t /= static_cast<unsigned long>(n + 1);
        acc += t;
    }
    return acc;
}

// Raw alternating route for arbitrary real s (moderate N only).
HPReal zeta_gregory_raw(double s, std::uint64_t N, mpfr_prec_t wp) {
    GregoryBlock b(N + 1, wp);
    HPReal ms(wp);
    mpfr_set_d(ms.raw(), -s, MPFR_RNDN);
    std::vector<HPReal> f;  // f[k] = (k+1)^{-s}
    f.reserve(N + 1);
    HPReal base(wp);
    for (std::uint64_t k = 0; k <= N; ++k) {
        mpfr_set_ui(base.raw(), static_cast<unsigned long>(k + 1), MPFR_RNDN);
        HPReal v(wp);
        mpfr_pow(v.raw(), base.raw(), ms.raw(), MPFR_RNDN);
        f.push_back(std::move(v));
    }
    HPReal acc(wp), inner(wp), coeff(wp);
    for (std::uint64_t n = 0; n <= N; ++n) {
        inner.set_zero();
        Integer c = 1;
        for (std::uint64_t k = 0; k <= n; ++k) {
            if (k > 0) {
                c *= static_cast<long>(n - k + 1);
                mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
            }
            coeff = HPReal::of(c, wp);
            if (k % 2 == 0)
                inner.add_mul(coeff, f[k]);
            else
                inner.sub_mul(coeff, f[k]);
        }
        acc.add_mul(b[n + 1], inner);
    }
    return acc;
}

}  // namespace

HPReal zeta_gregory(double s, std::uint64_t N, mpfr_prec_t prec) {
    if (s == 1.0) throw std::invalid_argument("zeta_gregory: pole at s = 1");
    if (N < 1) throw std::invalid_argument("zeta_gregory: N must be >= 1");
    bool integral = (s == std::floor(s)) && std::abs(s) < 1e9;
    long si = integral ? static_cast<long>(s) : 0;

    if (integral && si == 0) {
        // Every inner sum with n >= 1 vanishes identically; the result is
        // exactly -1 + |G_1| = -1/2.
        HPReal r(prec);
        mpfr_set_si_2exp(r.raw(), -1, -1, MPFR_RNDN);
        return r;
    }
    if (integral && si >= 2) {
        mpfr_prec_t wp = prec + sum_guard(N);
        HPReal acc = zeta_gregory_integer(static_cast<unsigned>(si - 1), N, wp);
        acc += HPReal::one_over(static_cast<unsigned long>(si - 1), wp);
        return acc.rounded_to(prec);
    }
    if (N > 600)
        throw std::invalid_argument("zeta_gregory: raw route limited to N <= 600 for non-integer s");
    mpfr_prec_t wp = PrecisionPolicy{prec}.inflated(N);
    HPReal acc = zeta_gregory_raw(s, N, wp);
    HPReal lead(wp);
    mpfr_set_d(lead.raw(), s - 1.0, MPFR_RNDN);
    mpfr_ui_div(lead.raw(), 1, lead.raw(), MPFR_RNDN);
    acc += lead;
    return acc.rounded_to(prec);
}

SeriesResult zeta_gregory_result(long s, std::uint64_t N, mpfr_prec_t prec) {
    SeriesResult r = make_result("zeta-gregory-" + std::to_string(s), N, prec);
    r.partial_sum = zeta_gregory(static_cast<double>(s), N, prec);
    r.tail_estimate = tail_estimate(r.series_id, N);
    mpfr_prec_t wp = prec + 32;
    if (s == 2) attach_named(r, "zeta2", wp);
    if (s == 3) attach_named(r, "zeta3", wp);
    return r;
}

HPReal tail_estimate(const std::string& series_id, std::uint64_t N) {
    double n = static_cast<double>(N);
    double ln = std::log(std::max(2.0, n));
    auto of = [](double v) { return HPReal::of(v, 64); };

    if (series_id == "fontana" || series_id == "ln2pi-product" || series_id == "delta1-product" ||
        series_id == "gamma-product" || series_id == "gn-shift" || series_id == "gamma1-log" ||
        series_id == "delta1-log" || series_id.rfind("sigma-series-", 0) == 0)
        return of(4.0 / (n * ln * ln));
    if (series_id == "gamma1-product" || series_id == "gn-harmonic") return of(4.0 / (n * ln));
    if (series_id == "gamma2-kernel" || series_id == "gamma2-log" || series_id == "gamma3-log")
        return of(0.4 / n);
    if (series_id == "delta2-kernel" || series_id == "delta2-log" || series_id == "delta3-log")
        return of(0.4 / std::pow(n, 4.0 / 3.0));
    if (series_id.rfind("kappa-def-", 0) == 0) {
        int p = std::stoi(series_id.substr(10));
        if (p == -1) return of(4.0 / ln);
        return of(4.0 / ((p + 1) * std::pow(n, p + 1) * ln * ln));
    }
    if (series_id.rfind("zeta-gregory-", 0) == 0) {
        long s = std::stol(series_id.substr(13));
        if (s <= 0) return of(0.0);
        double lf = 1.0;
        for (long i = 2; i < s; ++i) lf *= static_cast<double>(i);
        return of(4.0 * std::pow(ln, static_cast<double>(s - 1)) / (lf * n * ln * ln));
    }
    throw std::invalid_argument("tail_estimate: no tail model registered for '" + series_id + "'");
}

}  // namespace zetaconst
