#pragma once

#include <cstddef>
#include <span>

#include "zetaconst/rational.hpp"

namespace zetaconst {

// Exact combinatorial core. All values are memoized in process-wide tables
// that grow on demand; published entries are immutable, extension is
// serialized, and concurrent reads are safe. Results do not depend on the
// number of threads.

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

// Gregory coefficient G_n (coefficient of z^n in z/ln(1+z)), n >= 1.
// Computed by the recurrence consistent with the generating function:
//   G_n = (-1)^{n+1}/(n+1) - sum_{l=1}^{n-1} (-1)^{n-l} G_l / (n+1-l).
// Throws std::invalid_argument for n = 0.
Rational gregory(std::size_t n);

// Same value through the Stirling link G_n = (1/n!) sum_l S1(n,l)/(l+1);
// an independent path used for self-tests.
Rational gregory_via_stirling(std::size_t n);

// Signed Stirling number of the first kind: coefficient of x^l in the
// falling factorial x(x-1)...(x-n+1). Zero when l < 1 or l > n. n >= 1.
Integer stirling1(std::size_t n, long l);

// Generalized harmonic number H_n^{(m)} = sum_{k=1}^{n} k^{-m}; H_0 = 0.
// Requires m >= 1.
Rational harmonic(std::size_t n, unsigned m);

// Modified Bell polynomial P_m(x_1..x_m), generated by
// exp(sum x_n t^n/n) = sum P_m t^m, via P_m = (1/m) sum_{j=1}^m x_j P_{m-j}.
// xs must hold exactly m entries.
Rational bell_poly(std::size_t m, std::span<const Rational> xs);

// |S1(n+1,m+1)|/n! == P_m(H_n^{(1)}, -H_n^{(2)}, ..., (-1)^{m-1} H_n^{(m)}),
// checked in exact arithmetic. Requires m <= n.
bool bell_stirling_identity_holds(std::size_t n, std::size_t m);

}  // namespace zetaconst
