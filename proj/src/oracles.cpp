#include "zetaconst/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "zetaconst/constants.hpp"
#include "zetaconst/exact_tables.hpp"

namespace zetaconst {

namespace {

constexpr mpfr_prec_t kRelationPrec = 192;  // >= 40 decimal digits

HPReal delta_correction(unsigned m, std::uint64_t n, const HPReal& ln_n, mpfr_prec_t wp) {
    // n m! sum_{j=0}^{m} (-1)^{m+j} ln^j n / j!  -  (-1)^m m!
    HPReal poly(wp);
    for (unsigned j = 0; j <= m; ++j) {
        HPReal term = pow_si(ln_n, static_cast<long>(j), wp);
        term /= static_cast<unsigned long>(factorial(j).get_ui());
        if ((m + j) % 2 == 1)
            poly -= term;
        else
            poly += term;
    }
    unsigned long mf = factorial(m).get_ui();
    poly *= static_cast<unsigned long>(n);
    poly *= mf;
    HPReal boundary = HPReal::of(static_cast<long>(mf), wp);
    if (m % 2 == 1) boundary.negate();
    poly -= boundary;
    return poly;
}

}  // namespace

LimitSweep limit_sweep(unsigned m, std::span<const std::uint64_t> cutoffs, mpfr_prec_t prec) {
    if (m < 1 || m > 2) throw std::invalid_argument("limit_sweep: m must be 1 or 2");
    if (cutoffs.empty()) throw std::invalid_argument("limit_sweep: no cutoffs");
    LimitSweep out;
    out.m = m;
    out.cutoffs.assign(cutoffs.begin(), cutoffs.end());
    std::sort(out.cutoffs.begin(), out.cutoffs.end());
    for (auto n : out.cutoffs)
        if (n < 10) throw std::invalid_argument("limit_sweep: cutoffs must be >= 10");

    mpfr_prec_t wp = prec + 64;
    HPReal sum_over_k(wp);   // sum ln^m k / k
    HPReal sum_plain(wp);    // sum ln^m k
    HPReal lk(wp), po(wp), t(wp);
    std::size_t next = 0;
    for (std::uint64_t k = 1; k <= out.cutoffs.back(); ++k) {
        if (k > 1) {
            mpfr_log_ui(lk.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
            po = (m == 1) ? lk : sqr(lk);
            sum_plain += po;
            po /= static_cast<unsigned long>(k);
            sum_over_k += po;
        }
        while (next < out.cutoffs.size() && k == out.cutoffs[next]) {
            std::uint64_t n = out.cutoffs[next];
            HPReal ln_n(wp);
            mpfr_log_ui(ln_n.raw(), static_cast<unsigned long>(n), MPFR_RNDN);
            // gamma estimate: sum - ln^{m+1} n/(m+1)
            t = pow_si(ln_n, static_cast<long>(m) + 1, wp);
            t /= static_cast<unsigned long>(m + 1);
            out.gamma_estimates.push_back((sum_over_k - t).rounded_to(prec));
            // delta estimate: sum - correction - ln^m n / 2
            t = delta_correction(m, n, ln_n, wp);
            HPReal half = pow_si(ln_n, static_cast<long>(m), wp);
            half /= 2ul;
            out.delta_estimates.push_back((sum_plain - t - half).rounded_to(prec));
            ++next;
        }
    }
    return out;
}

HPReal gamma_limit_estimate(unsigned m, std::uint64_t n, mpfr_prec_t prec) {
    std::uint64_t cut[1] = {n};
    return limit_sweep(m, cut, prec).gamma_estimates.front();
}

HPReal delta_limit_estimate(unsigned m, std::uint64_t n, mpfr_prec_t prec) {
    std::uint64_t cut[1] = {n};
    return limit_sweep(m, cut, prec).delta_estimates.front();
}

namespace {

struct RelationDef {
    std::string target;
    std::vector<std::string> inputs;
    HPReal (*eval)(mpfr_prec_t);
};

HPReal val(const char* name, mpfr_prec_t wp) { return reference(name).value(wp); }

HPReal eval_delta1(mpfr_prec_t wp) {
    return val("ln2pi", wp) / HPReal::of(2l, wp) - HPReal::of(1l, wp);
}

HPReal eval_delta2(mpfr_prec_t wp) {
    HPReal g = val("gamma", wp), l = val("ln2pi", wp), pi = val("pi", wp);
    return val("gamma1", wp) + sqr(g) / HPReal::of(2l, wp) - sqr(l) / HPReal::of(2l, wp) -
           sqr(pi) / HPReal::of(24l, wp) + HPReal::of(2l, wp);
}

HPReal eval_delta3(mpfr_prec_t wp) {
    HPReal g = val("gamma", wp), g1 = val("gamma1", wp), g2 = val("gamma2", wp);
    HPReal l = val("ln2pi", wp), pi = val("pi", wp), z3 = val("zeta3", wp);
    HPReal r = HPReal::of(-3l, wp) / HPReal::of(2l, wp) * g2;
    r -= HPReal::of(3l, wp) * g1 * g;
    r -= pow_si(g, 3, wp);
    HPReal paren = HPReal::of(3l, wp) * g1 + HPReal::of(3l, wp) / HPReal::of(2l, wp) * sqr(g) -
                   sqr(pi) / HPReal::of(8l, wp);
    r -= paren * l;
    r += z3;
    r += pow_si(l, 3, wp) / HPReal::of(2l, wp);
    r -= HPReal::of(6l, wp);
    return r;
}

// The delta_2 and delta_1 relations substituted into each other give
//   gamma_1 = delta_2 + 2 delta_1^2 + 4 delta_1 - gamma^2/2 + pi^2/24.
HPReal eval_gamma1(mpfr_prec_t wp) {
    HPReal d1 = val("delta1", wp), d2 = val("delta2", wp);
    return d2 + HPReal::of(2l, wp) * sqr(d1) + HPReal::of(4l, wp) * d1 -
           sqr(val("gamma", wp)) / HPReal::of(2l, wp) + sqr(val("pi", wp)) / HPReal::of(24l, wp);
}

HPReal eval_gamma2(mpfr_prec_t wp) {
    HPReal g = val("gamma", wp), d1 = val("delta1", wp), d2 = val("delta2", wp), d3 = val("delta3", wp);
    HPReal pi = val("pi", wp), z3 = val("zeta3", wp);
    HPReal r = HPReal::of(-2l, wp) / HPReal::of(3l, wp) * d3;
    r -= HPReal::of(2l, wp) * d2 * (g + HPReal::of(2l, wp));
    r -= HPReal::of(4l, wp) * d1 * d2;
    r -= HPReal::of(16l, wp) / HPReal::of(3l, wp) * pow_si(d1, 3, wp);
    r -= HPReal::of(4l, wp) * sqr(d1) * (g + HPReal::of(4l, wp));
    r -= HPReal::of(8l, wp) * d1 * (g + HPReal::of(1l, wp));
    r -= g * sqr(pi) / HPReal::of(12l, wp);
    r += pow_si(g, 3, wp) / HPReal::of(3l, wp);
    r += HPReal::of(2l, wp) / HPReal::of(3l, wp) * z3;
    r -= HPReal::of(4l, wp) / HPReal::of(3l, wp);
    return r;
}

const std::map<std::string, RelationDef>& relation_defs() {
    static const std::map<std::string, RelationDef> defs = {
        {"delta1", {"delta1", {"ln2pi"}, eval_delta1}},
        {"delta2", {"delta2", {"gamma1", "gamma", "ln2pi", "pi"}, eval_delta2}},
        {"delta3",
         {"delta3", {"gamma2", "gamma1", "gamma", "ln2pi", "pi", "zeta3"}, eval_delta3}},
        {"gamma1_from_delta", {"gamma1", {"delta2", "delta1", "gamma", "pi"}, eval_gamma1}},
        {"gamma2_from_delta",
         {"gamma2", {"delta3", "delta2", "delta1", "gamma", "pi", "zeta3"}, eval_gamma2}},
    };
    return defs;
}

}  // namespace

const std::vector<std::string>& relation_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [k, _] : relation_defs()) v.push_back(k);
        return v;
    }();
    return ids;
}

RelationReport relation_check(std::string_view relation_id) {
    auto it = relation_defs().find(std::string(relation_id));
    if (it == relation_defs().end())
        throw std::invalid_argument("relation_check: unknown relation '" + std::string(relation_id) + "'");
    const RelationDef& def = it->second;
    RelationReport rep;
    rep.relation_id = it->first;
    rep.inputs = def.inputs;
    rep.computed = def.eval(kRelationPrec);
    rep.target = reference(def.target).value(kRelationPrec);
    rep.abs_difference = abs_diff(rep.computed, rep.target);
    rep.weakest_input_digits = 1000;
    for (const auto& in : def.inputs)
        rep.weakest_input_digits = std::min(rep.weakest_input_digits, reference(in).fractional_digits);
    return rep;
}

namespace {

double duality_tail_model(unsigned col, unsigned expo, double X) {
    // |S1(n,col)|/n! ~ ln^{col-1}(n)/((col-1)! n), so the term over n^expo
    // behaves like ln^{col-1}(n)/((col-1)! n^{expo+1}) and its tail from X
    // is about ln^{col-1}(X)/((col-1)! expo X^expo).
    double lf = 1.0;
    for (unsigned i = 2; i < col; ++i) lf *= i;
    return std::pow(std::log(X), col - 1) / (lf * expo * std::pow(X, expo));
}

// sum_{n>=col} |S1(n,col)|/(n! n^expo), truncated where the model tail
// drops below budget. Returns the partial sum, term count and model tail.
struct SideSum {
    HPReal value;
    std::uint64_t terms;
    double tail;
};

SideSum duality_side(unsigned col, unsigned expo, double budget, mpfr_prec_t wp) {
    std::uint64_t N = col + 2;
    while (N < (std::uint64_t{1} << 21) && duality_tail_model(col, expo, static_cast<double>(N)) > budget)
        N *= 2;
    std::vector<HPReal> q(col, HPReal(wp));  // q[r] = |S1(n,r+1)|/n!
    HPReal acc(wp), t(wp);
    for (std::uint64_t n = 1; n <= N; ++n) {
        if (n == 1) {
            q[0] = HPReal::of(1l, wp);
        } else {
            for (std::size_t r = col; r-- > 0;) {
                q[r] *= static_cast<unsigned long>(n - 1);
                if (r > 0) q[r] += q[r - 1];
                q[r] /= static_cast<unsigned long>(n);
            }
        }
        if (n < col) continue;
        t = q[col - 1];
        for (unsigned e = 0; e < expo; ++e) t /= static_cast<unsigned long>(n);
        acc += t;
    }
    return {acc, N, duality_tail_model(col, expo, static_cast<double>(N))};
}

}  // namespace

DualityReport stirling_duality_check(unsigned k, unsigned m, double budget, mpfr_prec_t prec) {
    if (k < 1) throw std::invalid_argument("stirling_duality_check: k must be >= 1");
    // k + m >= 2 keeps both sides genuinely distinct sums; the diagonal
    // k == m+1 (which includes (1,0)) makes the two sides the same series
    // and the difference is structurally zero.
    if (k + m < 2 && k != m + 1)
        throw std::invalid_argument("stirling_duality_check: requires k + m >= 2");
    mpfr_prec_t wp = prec + 64;
    SideSum lhs = duality_side(k, m + 1, budget, wp);
    SideSum rhs = (k == m + 1) ? lhs : duality_side(m + 1, k, budget, wp);
    DualityReport rep;
    rep.k = k;
    rep.m = m;
    rep.lhs = lhs.value.rounded_to(prec);
    rep.rhs = rhs.value.rounded_to(prec);
    rep.abs_difference = abs_diff(lhs.value, rhs.value).rounded_to(prec);
    rep.combined_tail = HPReal::of(4.0 * (lhs.tail + rhs.tail), 64);
    rep.lhs_terms = lhs.terms;
    rep.rhs_terms = rhs.terms;
    rep.pass = rep.abs_difference.to_double() <= rep.combined_tail.to_double() + 1e-8;
    return rep;
}

}  // namespace zetaconst
