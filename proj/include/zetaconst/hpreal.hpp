#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "zetaconst/rational.hpp"

namespace zetaconst {

// Arbitrary-precision real with explicit working precision in bits.
// Every operation rounds to nearest at the precision of its destination,
// so per-operation error is at most 0.5 ulp. Precision is never ambient:
// it is fixed at construction and results carry max(operand precisions)
// unless stated otherwise.
class HPReal {
public:
    static constexpr mpfr_prec_t kMinPrec = 16;

    HPReal() : HPReal(64) {}
    explicit HPReal(mpfr_prec_t prec) {
        mpfr_init2(v_, prec < kMinPrec ? kMinPrec : prec);
        mpfr_set_zero(v_, 1);
    }
    HPReal(const HPReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    HPReal(HPReal&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    HPReal& operator=(const HPReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    HPReal& operator=(HPReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~HPReal() { mpfr_clear(v_); }

    static HPReal of(long v, mpfr_prec_t prec) {
        HPReal r(prec);
        mpfr_set_si(r.v_, v, MPFR_RNDN);
        return r;
    }
    static HPReal of(unsigned long v, mpfr_prec_t prec) {
        HPReal r(prec);
        mpfr_set_ui(r.v_, v, MPFR_RNDN);
        return r;
    }
    static HPReal of(double v, mpfr_prec_t prec) {
        HPReal r(prec);
        mpfr_set_d(r.v_, v, MPFR_RNDN);
        return r;
    }
    static HPReal of(const Rational& q, mpfr_prec_t prec) {
        HPReal r(prec);
        mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static HPReal of(const Integer& z, mpfr_prec_t prec) {
        HPReal r(prec);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    // Parses a plain decimal string ("-0.0123", "1.5e-3"). Throws on garbage.
    static HPReal of_decimal(std::string_view dec, mpfr_prec_t prec);
    // 1/u, correctly rounded.
    static HPReal one_over(unsigned long u, mpfr_prec_t prec) {
        HPReal r(prec);
        mpfr_set_ui(r.v_, u, MPFR_RNDN);
        mpfr_ui_div(r.v_, 1, r.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    // Decimal rendering, round-to-nearest at `significant` digits.
    std::string decimal(int significant) const;

    // Rounds a copy to a (usually smaller) precision.
    HPReal rounded_to(mpfr_prec_t prec) const {
        HPReal r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    // In-place arithmetic at this value's precision.
    HPReal& operator+=(const HPReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    HPReal& operator-=(const HPReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    HPReal& operator*=(const HPReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    HPReal& operator/=(const HPReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    HPReal& operator+=(unsigned long u) { mpfr_add_ui(v_, v_, u, MPFR_RNDN); return *this; }
    HPReal& operator-=(unsigned long u) { mpfr_sub_ui(v_, v_, u, MPFR_RNDN); return *this; }
    HPReal& operator*=(unsigned long u) { mpfr_mul_ui(v_, v_, u, MPFR_RNDN); return *this; }
    HPReal& operator/=(unsigned long u) { mpfr_div_ui(v_, v_, u, MPFR_RNDN); return *this; }

    // this += a*b, fused (one rounding).
    HPReal& add_mul(const HPReal& a, const HPReal& b) {
        mpfr_fma(v_, a.v_, b.v_, v_, MPFR_RNDN);
        return *this;
    }
    // this -= a*b, fused.
    HPReal& sub_mul(const HPReal& a, const HPReal& b) {
        mpfr_fms(v_, a.v_, b.v_, v_, MPFR_RNDN);
        mpfr_neg(v_, v_, MPFR_RNDN);
        return *this;
    }
    HPReal& negate() { mpfr_neg(v_, v_, MPFR_RNDN); return *this; }
    HPReal& set_zero() { mpfr_set_zero(v_, 1); return *this; }

    friend HPReal operator+(const HPReal& a, const HPReal& b) { return binop(a, b, mpfr_add); }
    friend HPReal operator-(const HPReal& a, const HPReal& b) { return binop(a, b, mpfr_sub); }
    friend HPReal operator*(const HPReal& a, const HPReal& b) { return binop(a, b, mpfr_mul); }
    friend HPReal operator/(const HPReal& a, const HPReal& b) { return binop(a, b, mpfr_div); }
    friend HPReal operator-(const HPReal& a) {
        HPReal r(a.precision());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend int cmp(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    friend HPReal abs(const HPReal& a) {
        HPReal r(a.precision());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend HPReal sqr(const HPReal& a) {
        HPReal r(a.precision());
        mpfr_sqr(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static HPReal binop(const HPReal& a, const HPReal& b, BinFn fn) {
        HPReal r(a.precision() > b.precision() ? a.precision() : b.precision());
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

// ln k at the requested precision; total error under 2 ulp (MPFR rounds to
// nearest, so in fact 0.5 ulp). ln 1 is exactly 0. Rejects k = 0.
HPReal ln_int(unsigned long k, mpfr_prec_t prec);

HPReal const_pi(mpfr_prec_t prec);
HPReal pow_si(const HPReal& base, long e, mpfr_prec_t prec);

// |a - b|
inline HPReal abs_diff(const HPReal& a, const HPReal& b) { return abs(a - b); }

// Precision-inflation rule for alternating binomial sums. A sum of depth m
// carries binomial mass up to 3^m, so the working precision adds
// ceil(m*log2(3)) + 32 guard bits on top of the target. The ceiling is
// computed with the fixed overestimate 1585/1000 >= log2(3) to keep the
// result platform-independent.
struct PrecisionPolicy {
    mpfr_prec_t target_bits = 128;

    mpfr_prec_t inflated(std::uint64_t depth) const {
        return target_bits + extra_bits(depth);
    }
    static mpfr_prec_t extra_bits(std::uint64_t depth) {
        return static_cast<mpfr_prec_t>((depth * 1585 + 999) / 1000 + 32);
    }
};

}  // namespace zetaconst
