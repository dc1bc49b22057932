#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zetaconst {

using Integer = mpz_class;

// Exact rational scalar. Invariant: lowest terms, denominator > 0.
// Arithmetic never rounds.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long num) : q_(num) {}
    Rational(long num, long den);
    explicit Rational(const Integer& z) : q_(z) {}
    Rational(const Integer& num, const Integer& den);

    // Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    // "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;
    double to_double() const { return q_.get_d(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend Rational abs(const Rational& a) { Rational r; r.q_ = ::abs(a.q_); return r; }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

}  // namespace zetaconst
