#pragma once

#include <cstddef>
#include <vector>

#include "zetaconst/hpreal.hpp"

namespace zetaconst {

// sigma_k = sum_{n>=1} |G_n|/(n+k), evaluated through its closed form
//   sigma_k = 1/k + sum_{m=1}^{k} (-1)^m C(k,m) ln(m+1).
// The alternating sum is evaluated at the policy-inflated precision for
// depth k and rounded back to the requested precision. Result lies in
// (0,1). Rejects precision below 16 bits and k = 0.
HPReal sigma_closed(unsigned k, mpfr_prec_t prec);

// Alternating binomial transform of ln^m sampled at the integers:
//   w_m(k) = sum_{l=1}^{k} (-1)^l C(k,l) ln^m(l+1),   k = 0..k_max.
// Binomials are exact; the caller chooses a working precision inflated for
// the largest depth used.
std::vector<HPReal> log_power_transform(std::size_t k_max, unsigned m, mpfr_prec_t working_prec);

// u_k = sigma_k - 1/k for k = 0..k_max (u_0 = 0); identical to
// log_power_transform(k_max, 1, wp). This is the building block of the
// ln^2 kernel.
std::vector<HPReal> sigma_u_values(std::size_t k_max, mpfr_prec_t working_prec);

// The ln^2 finite-difference kernel: the alternating binomial transform of
// ln^2 evaluated at m+1. Two independent routes:
//   - product form (primary): double sum over (l,k) of
//     (-1)^{k-l} C(m,k) C(k,l) u_k u_{m-l}, k != 0, l != m;
//   - direct form (self-test): sum_{j=1}^{m} (-1)^j C(m,j) ln^2(j+1).
// Both evaluate at policy-inflated precision for depth m and round back.
HPReal lnsq_kernel(unsigned m, mpfr_prec_t prec);
HPReal lnsq_kernel_direct(unsigned m, mpfr_prec_t prec);

// Streaming evaluator producing the product-form kernel for m = 1..n_max
// at a fixed working precision in O(n_max^2) operations. It folds the
// inner sums with the Pascal-triangle recurrence
//   v(k,m) = v(k-1,m) - v(k-1,m-1),  v(0,m) = u_m,
// which reproduces the double sum term for term.
class LnsqKernelStream {
public:
    LnsqKernelStream(std::size_t n_max, mpfr_prec_t working_prec);

    // kernel(m) for m = next_index(); advances the stream.
    HPReal next();
    std::size_t next_index() const { return m_; }
    const std::vector<HPReal>& u() const { return u_; }

private:
    std::size_t n_max_;
    mpfr_prec_t prec_;
    std::size_t m_ = 1;
    std::vector<HPReal> u_;
    std::vector<HPReal> col_prev_;  // v(., m-1)
    std::vector<HPReal> col_;
};

}  // namespace zetaconst
