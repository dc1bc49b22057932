#include "zetaconst/sequences.hpp"

#include <stdexcept>

#include "zetaconst/exact_tables.hpp"

namespace zetaconst {

RationalSeq binomial_transform(const RationalSeq& a) {
    if (a.empty()) throw std::invalid_argument("binomial_transform: empty prefix");
    std::size_t L = a.size();
    RationalSeq out(L);
    for (std::size_t m = 0; m < L; ++m) {
        Rational s(0);
        for (std::size_t j = 0; j <= m; ++j) {
            Rational term = Rational(binomial(m, j)) * a[j];
            if (j % 2 == 0)
                s += term;
            else
                s -= term;
        }
        out[m] = s;
    }
    return out;
}

RealSeq binomial_transform(const RealSeq& a, mpfr_prec_t target_prec) {
    if (a.empty()) throw std::invalid_argument("binomial_transform: empty prefix");
    std::size_t L = a.size();
    PrecisionPolicy policy{target_prec};
    mpfr_prec_t wp = policy.inflated(L);
    RealSeq out;
    out.reserve(L);
    HPReal coeff(wp);
    for (std::size_t m = 0; m < L; ++m) {
        HPReal s(wp);
        for (std::size_t j = 0; j <= m; ++j) {
            coeff = HPReal::of(binomial(m, j), wp);
            if (j % 2 == 0)
                s.add_mul(coeff, a[j]);
            else
                s.sub_mul(coeff, a[j]);
        }
        out.push_back(s.rounded_to(target_prec));
    }
    return out;
}

RationalSeq harmonic_product(const RationalSeq& a, const RationalSeq& b) {
    if (a.size() != b.size()) throw std::invalid_argument("harmonic_product: length mismatch");
    if (a.empty()) throw std::invalid_argument("harmonic_product: empty prefix");
    std::size_t L = a.size();
    RationalSeq out(L);
    for (std::size_t m = 0; m < L; ++m) {
        Rational s(0);
        for (std::size_t k = 0; k <= m; ++k) {
            for (std::size_t l = 0; l <= k; ++l) {
                Rational term = Rational(binomial(m, k) * binomial(k, l)) * a[k] * b[m - l];
                if ((k - l) % 2 == 0)
                    s += term;
                else
                    s -= term;
            }
        }
        out[m] = s;
    }
    return out;
}

RealSeq harmonic_product(const RealSeq& a, const RealSeq& b, mpfr_prec_t target_prec) {
    if (a.size() != b.size()) throw std::invalid_argument("harmonic_product: length mismatch");
    if (a.empty()) throw std::invalid_argument("harmonic_product: empty prefix");
    std::size_t L = a.size();
    PrecisionPolicy policy{target_prec};
    mpfr_prec_t wp = policy.inflated(L);
    RealSeq out;
    out.reserve(L);
    HPReal term(wp);
    for (std::size_t m = 0; m < L; ++m) {
        HPReal s(wp);
        for (std::size_t k = 0; k <= m; ++k) {
            for (std::size_t l = 0; l <= k; ++l) {
                term = HPReal::of(binomial(m, k) * binomial(k, l), wp);
                term *= a[k];
                term *= b[m - l];
                if ((k - l) % 2 == 0)
                    s += term;
                else
                    s -= term;
            }
        }
        out.push_back(s.rounded_to(target_prec));
    }
    return out;
}

bool transform_product_identity_holds(const RationalSeq& a, const RationalSeq& b) {
    if (a.size() != b.size()) throw std::invalid_argument("transform_product_identity_holds: length mismatch");
    RationalSeq ab(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) ab[i] = a[i] * b[i];
    RationalSeq lhs = binomial_transform(ab);
    RationalSeq rhs = harmonic_product(binomial_transform(a), binomial_transform(b));
    return lhs == rhs;
}

bool binomial_average_identity_holds(const RationalSeq& a, std::size_t n) {
    if (a.size() < n + 1) throw std::invalid_argument("binomial_average_identity_holds: prefix too short");
    Rational lhs(0);
    for (std::size_t l = 0; l <= n; ++l) {
        Rational term = Rational(binomial(n, l)) * a[l] / Rational(static_cast<long>(l) + 1);
        if (l % 2 == 0)
            lhs += term;
        else
            lhs -= term;
    }
    Rational rhs(0);
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t l = 0; l <= k; ++l) {
            Rational term = Rational(binomial(k, l)) * a[l];
            if (l % 2 == 0)
                rhs += term;
            else
                rhs -= term;
        }
    }
    rhs /= Rational(static_cast<long>(n) + 1);
    return lhs == rhs;
}

}  // namespace zetaconst
