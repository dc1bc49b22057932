#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zetaconst/hpreal.hpp"

namespace zetaconst {

// Independent cross-checks of the series engine: finite-cutoff limit
// representations of gamma_m and delta_m, the polynomial relation web
// between the delta and gamma constants, and the duality of
// Stirling-weighted sums. No extrapolation or acceleration is applied;
// the estimates fail independently of the series machinery.

// Finite-n estimates, one summation pass shared by gamma and delta:
//   gamma_m(n) ~ sum_{k<=n} ln^m k / k - ln^{m+1} n/(m+1)
//   delta_m(n) ~ sum_{k<=n} ln^m k - integral_1^n ln^m x dx - ln^m n / 2
// The delta correction is the exact antiderivative polynomial
//   n m! sum_j (-1)^{m+j} ln^j n / j!  -  (-1)^m m!
// including its lower-boundary constant.
struct LimitSweep {
    unsigned m = 0;
    std::vector<std::uint64_t> cutoffs;
    std::vector<HPReal> gamma_estimates;
    std::vector<HPReal> delta_estimates;
};
LimitSweep limit_sweep(unsigned m, std::span<const std::uint64_t> cutoffs, mpfr_prec_t prec = 128);

HPReal gamma_limit_estimate(unsigned m, std::uint64_t n, mpfr_prec_t prec = 128);
HPReal delta_limit_estimate(unsigned m, std::uint64_t n, mpfr_prec_t prec = 128);

// Evaluates one of the polynomial relations between the registry constants
// at 40-digit working precision and reports the difference against the
// registry target. Relation ids: delta1, delta2, delta3,
// gamma1_from_delta, gamma2_from_delta.
struct RelationReport {
    std::string relation_id;
    std::vector<std::string> inputs;
    HPReal computed;
    HPReal target;
    HPReal abs_difference;
    int weakest_input_digits = 0;
};
RelationReport relation_check(std::string_view relation_id);
const std::vector<std::string>& relation_ids();

// Duality of Stirling-weighted sums:
//   sum_{n>=k} |S1(n,k)|/(n! n^{m+1}) == sum_{n>=m+1} |S1(n,m+1)|/(n! n^k).
// Both sides are truncated where their tail models drop below `budget`;
// the check passes when the sides agree within the combined tail
// estimates plus 1e-8. Requires k >= 1, k + m >= 2.
struct DualityReport {
    unsigned k = 0;
    unsigned m = 0;
    HPReal lhs;
    HPReal rhs;
    HPReal abs_difference;
    HPReal combined_tail;
    std::uint64_t lhs_terms = 0;
    std::uint64_t rhs_terms = 0;
    bool pass = false;
};
DualityReport stirling_duality_check(unsigned k, unsigned m, double budget = 3e-9,
                                     mpfr_prec_t prec = 128);

}  // namespace zetaconst
