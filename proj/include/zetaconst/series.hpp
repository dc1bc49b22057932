#pragma once

#include <cstdint>
#include <utility>

#include "zetaconst/series_result.hpp"

namespace zetaconst {

// Constant-series evaluators. Terms are summed in strictly increasing
// index order with a fixed reduction order, so identical inputs give
// bit-identical outputs. Rational-term series carry an exact per-term
// prefix up to the Gregory crossover (n = 64); the remainder is HPReal.

// gamma = sum |G_n|/n   (Fontana-Mascheroni series)
SeriesResult gamma_fontana(std::uint64_t N, mpfr_prec_t prec = 128);

// ln 2pi = 3/2 + sum_n (1/n) sum_{k=1}^{n} |G_k G_{n+1-k}|
SeriesResult ln2pi_product_series(std::uint64_t N, mpfr_prec_t prec = 128);

// delta_1 = (1 - ln 2pi)/2 + the same product series
SeriesResult delta1_product_series(std::uint64_t N, mpfr_prec_t prec = 128);

// gamma = 2 ln 2pi - 3 - 2 sum_n (1/(n+1)) sum_{k=1}^{n} |G_k G_{n+2-k}|
SeriesResult gamma_product_series(std::uint64_t N, mpfr_prec_t prec = 128);

// gamma_1 = 3/2 - zeta(2) + sum_{n>=2} [ |G_n|/n^2
//           + sum_{k=1}^{n-1} |G_k G_{n+1-k}| (H_n - H_k)/(n+1-k) ]
// Requires N >= 2; terms run n = 2..N.
SeriesResult gamma1_product_series(std::uint64_t N, mpfr_prec_t prec = 128);

// Second-order series over the ln^2 kernel:
//   gamma_2 = sum_n |G_{n+1}|/(n+1) * sum_{m<=n} kernel(m)
//   delta_2 = sum_m |G_{m+1}| * kernel(m)
// Evaluated at the policy-inflated precision for depth N. The pair variant
// shares one kernel stream. Rejects target precision below 16 bits.
std::pair<SeriesResult, SeriesResult> second_order_kernel_pair(std::uint64_t N, mpfr_prec_t prec = 128);
SeriesResult gamma2_kernel_series(std::uint64_t N, mpfr_prec_t prec = 128);
SeriesResult delta2_kernel_series(std::uint64_t N, mpfr_prec_t prec = 128);

// Generic log-power series (m = 1, 2, 3):
//   gamma_m = sum_n |G_{n+1}|/(n+1) sum_{k<=n} T(ln^m)(k+1)
//   delta_m = sum_n |G_{n+1}| T(ln^m)(n+1)
// where T is the alternating binomial transform. Rejects m = 0.
SeriesResult gamma_log_series(unsigned m, std::uint64_t N, mpfr_prec_t prec = 128);
SeriesResult delta_log_series(unsigned m, std::uint64_t N, mpfr_prec_t prec = 128);

// sigma_k partial sums: sum_{n<=N} |G_n|/(n+k).
SeriesResult sigma_series(unsigned k, std::uint64_t N, mpfr_prec_t prec = 128);

// sum |G_n| H_n / n -> zeta(2) - 1
SeriesResult gregory_harmonic_series(std::uint64_t N, mpfr_prec_t prec = 128);

// sum_{n>=2} |G_n|/(n-1) -> (ln 2pi - gamma - 1)/2.  Requires N >= 2.
SeriesResult gregory_shift_series(std::uint64_t N, mpfr_prec_t prec = 128);

// kappa_p = sum |G_n| n^{-p-1}, p >= -1. kappa_{-1} tracks 1, kappa_0
// tracks gamma, kappa_1 tracks the registry value.
SeriesResult kappa_def_series(int p, std::uint64_t N, mpfr_prec_t prec = 128);

// kappa_p = sum_{k=2}^{K} ((-1)^k/k) sum_{n=p+1}^{N_k} |S1(n,p+1)|/(n! n^{k-1}).
// N caps the inner truncation at k = 2; inner truncations for larger k are
// derived from the tail model so every k contributes comparable error.
SeriesResult kappa_stirling_series(unsigned p, unsigned K, std::uint64_t N, mpfr_prec_t prec = 128);

// Same double series through the modified-Bell form
//   sum_{n>=p} P_p(H_n^{(1)}, -H_n^{(2)}, ...)/(n+1)^k;
// an independent implementation path.
SeriesResult kappa_bell_series(unsigned p, unsigned K, std::uint64_t N, mpfr_prec_t prec = 128);

// kappa_1 = sum_{k=2}^{K} ((-1)^k/k) sum_{n=2}^{N_k} H_{n-1}/n^k.
SeriesResult kappa1_euler_series(unsigned K, std::uint64_t N, mpfr_prec_t prec = 128);

// Gregory-weighted representation of zeta:
//   zeta(s) = 1/(s-1) + sum_{n>=0} |G_{n+1}| sum_k (-1)^k C(n,k) (k+1)^{-s}.
// At s = 0 every inner sum with n >= 1 vanishes identically and the result
// is exactly -1/2. For integer s >= 2 the inner sums are evaluated through
// their generalized-harmonic closed form (exact identity, checked by unit
// tests), which avoids the 2^n cancellation of the raw alternating sums and
// admits large N. Non-integer s uses the raw sums and is restricted to
// N <= 600 where the precision policy is affordable. Rejects s = 1.
HPReal zeta_gregory(double s, std::uint64_t N, mpfr_prec_t prec = 128);
SeriesResult zeta_gregory_result(long s, std::uint64_t N, mpfr_prec_t prec = 128);

// Heuristic tail estimate for single-truncation series: integral
// comparison of the term model from N to infinity, times a safety factor
// of 4. Reported, never rigorous. Throws for ids without a registered
// single-truncation model (the kappa double series compute theirs
// internally).
HPReal tail_estimate(const std::string& series_id, std::uint64_t N);

}  // namespace zetaconst
