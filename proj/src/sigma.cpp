#include "zetaconst/sigma.hpp"

#include <stdexcept>
#include <utility>

#include "zetaconst/exact_tables.hpp"

namespace zetaconst {

namespace {

std::vector<HPReal> log_table(std::size_t up_to, mpfr_prec_t wp) {
    std::vector<HPReal> logs;
    logs.reserve(up_to + 1);
    logs.emplace_back(wp);  // logs[0] unused
    for (std::size_t j = 1; j <= up_to; ++j) logs.push_back(ln_int(static_cast<unsigned long>(j), wp));
    return logs;
}

// sum_{m=1}^{k} (-1)^m C(k,m) f(m+1) with f given as a table; fused adds.
HPReal alternating_binomial_sum(unsigned k, const std::vector<HPReal>& f, mpfr_prec_t wp) {
    HPReal acc(wp);
    Integer c = 1;
    HPReal coeff(wp);
    for (unsigned m = 1; m <= k; ++m) {
        c *= static_cast<long>(k - m + 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), m);
        coeff = HPReal::of(c, wp);
        if (m % 2 == 1)
            acc.sub_mul(coeff, f[m + 1]);
        else
            acc.add_mul(coeff, f[m + 1]);
    }
    return acc;
}

}  // namespace

HPReal sigma_closed(unsigned k, mpfr_prec_t prec) {
    if (k == 0) throw std::invalid_argument("sigma_closed: k must be >= 1");
    if (prec < 16) throw std::invalid_argument("sigma_closed: precision below 16 bits");
    PrecisionPolicy policy{prec};
    mpfr_prec_t wp = policy.inflated(k);
    std::vector<HPReal> logs = log_table(k + 1, wp);
    HPReal s = HPReal::one_over(k, wp);
    s += alternating_binomial_sum(k, logs, wp);
    return s.rounded_to(prec);
}

std::vector<HPReal> log_power_transform(std::size_t k_max, unsigned m, mpfr_prec_t working_prec) {
    if (m == 0) throw std::invalid_argument("log_power_transform: power m must be >= 1");
    std::vector<HPReal> logs = log_table(k_max + 1, working_prec);
    if (m > 1)
        for (auto& l : logs) l = pow_si(l, static_cast<long>(m), working_prec);
    std::vector<HPReal> w;
    w.reserve(k_max + 1);
    w.emplace_back(working_prec);  // w(0) = 0
    for (std::size_t k = 1; k <= k_max; ++k)
        w.push_back(alternating_binomial_sum(static_cast<unsigned>(k), logs, working_prec));
    return w;
}

std::vector<HPReal> sigma_u_values(std::size_t k_max, mpfr_prec_t working_prec) {
    return log_power_transform(k_max, 1, working_prec);
}

HPReal lnsq_kernel_direct(unsigned m, mpfr_prec_t prec) {
    PrecisionPolicy policy{prec};
    mpfr_prec_t wp = policy.inflated(m);
    std::vector<HPReal> logs = log_table(m + 1, wp);
    for (auto& l : logs) l = sqr(l);
    return alternating_binomial_sum(m, logs, wp).rounded_to(prec);
}

HPReal lnsq_kernel(unsigned m, mpfr_prec_t prec) {
    PrecisionPolicy policy{prec};
    mpfr_prec_t wp = policy.inflated(m);
    std::vector<HPReal> u = sigma_u_values(m, wp);
    HPReal acc(wp);
    HPReal term(wp);
    // 0 <= l <= k <= m with k != 0, l != m; u_0 = 0 makes both exclusions
    // automatic, but they are kept explicit in the loop bounds.
    for (unsigned k = 1; k <= m; ++k) {
        for (unsigned l = 0; l <= k && l < m; ++l) {
            term = HPReal::of(binomial(m, k) * binomial(k, l), wp);
            term *= u[k];
            term *= u[m - l];
            if ((k - l) % 2 == 1)
                acc -= term;
            else
                acc += term;
        }
    }
    return acc.rounded_to(prec);
}

LnsqKernelStream::LnsqKernelStream(std::size_t n_max, mpfr_prec_t working_prec)
    : n_max_(n_max), prec_(working_prec), u_(sigma_u_values(n_max, working_prec)) {
    col_prev_.emplace_back(prec_);  // v(0,0) = u_0 = 0
}

HPReal LnsqKernelStream::next() {
    std::size_t m = m_;
    if (m > n_max_) throw std::out_of_range("LnsqKernelStream: exhausted");
    col_.clear();
    col_.reserve(m + 1);
    col_.push_back(u_[m]);  // v(0,m) = u_m
    for (std::size_t k = 1; k <= m; ++k) col_.push_back(col_[k - 1] - col_prev_[k - 1]);

    // kernel(m) = sum_{k=1}^{m} (-1)^k C(m,k) u_k v(k,m)
    HPReal acc(prec_);
    HPReal term(prec_);
    Integer c = 1;
    for (std::size_t k = 1; k <= m; ++k) {
        c *= static_cast<long>(m - k + 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
        term = HPReal::of(c, prec_);
        term *= u_[k];
        term *= col_[k];
        if (k % 2 == 1)
            acc -= term;
        else
            acc += term;
    }
    std::swap(col_prev_, col_);
    ++m_;
    return acc;
}

}  // namespace zetaconst
