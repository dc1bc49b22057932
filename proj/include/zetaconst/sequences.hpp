#pragma once

#include <cstddef>
#include <vector>

#include "zetaconst/hpreal.hpp"
#include "zetaconst/rational.hpp"

namespace zetaconst {

// Finite sequence prefixes, 1-based in the math, 0-based in storage:
// seq[i] holds entry i+1. Exact and floating prefixes never mix.
using RationalSeq = std::vector<Rational>;
using RealSeq = std::vector<HPReal>;

// Alternating binomial (finite-difference) transform:
//   T(a)(m+1) = sum_{j=0}^{m} (-1)^j C(m,j) a(j+1).
// Output has the input's length. The transform is an involution. Exact for
// rational input; the HPReal overload works at the policy-inflated
// precision for the prefix length and rounds back to target_prec.
// Rejects an empty prefix.
RationalSeq binomial_transform(const RationalSeq& a);
RealSeq binomial_transform(const RealSeq& a, mpfr_prec_t target_prec);

// Harmonic product of prefixes:
//   (a#b)(m+1) = sum_{0<=l<=k<=m} (-1)^{k-l} C(m,k) C(k,l) a(k+1) b(m+1-l),
// commutative and associative. Rejects prefixes of different lengths.
RationalSeq harmonic_product(const RationalSeq& a, const RationalSeq& b);
RealSeq harmonic_product(const RealSeq& a, const RealSeq& b, mpfr_prec_t target_prec);

// T(a.b) == T(a) # T(b) where a.b is the pointwise product; checked in
// exact arithmetic componentwise.
bool transform_product_identity_holds(const RationalSeq& a, const RationalSeq& b);

// sum_{l=0}^{n} (-1)^l C(n,l) a(l+1)/(l+1)
//   == (1/(n+1)) sum_{k=0}^{n} sum_{l=0}^{k} (-1)^l C(k,l) a(l+1),
// exact. Requires prefix length >= n+1.
bool binomial_average_identity_holds(const RationalSeq& a, std::size_t n);

}  // namespace zetaconst
