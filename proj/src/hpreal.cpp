#include "zetaconst/hpreal.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace zetaconst {

HPReal HPReal::of_decimal(std::string_view dec, mpfr_prec_t prec) {
    HPReal r(prec);
    std::string s(dec);
    if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("HPReal: malformed decimal '" + s + "'");
    return r;
}

std::string HPReal::decimal(int significant) const {
    if (significant < 1) significant = 1;
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t exp10 = 0;
    char* digits = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(significant), v_, MPFR_RNDN);
    if (digits == nullptr) throw std::runtime_error("HPReal: decimal conversion failed");
    std::string mant(digits);
    mpfr_free_str(digits);

    bool neg = !mant.empty() && mant[0] == '-';
    std::string body = neg ? mant.substr(1) : mant;
    std::string out = neg ? "-" : "";
    // mpfr convention: value = 0.mant * 10^exp10
    if (exp10 > 0 && exp10 <= significant + 4) {
        if (static_cast<size_t>(exp10) >= body.size()) {
            out += body;
            out.append(static_cast<size_t>(exp10) - body.size(), '0');
        } else {
            out += body.substr(0, static_cast<size_t>(exp10)) + "." + body.substr(static_cast<size_t>(exp10));
        }
    } else if (exp10 <= 0 && exp10 > -6) {
        out += "0.";
        out.append(static_cast<size_t>(-exp10), '0');
        out += body;
    } else {
        out += body.substr(0, 1);
        if (body.size() > 1) out += "." + body.substr(1);
        out += "e" + std::to_string(exp10 - 1);
    }
    // trim trailing zeros in the fraction part, keep at least one digit
    if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
        size_t last = out.find_last_not_of('0');
        if (out[last] == '.') last--;
        out.erase(last + 1);
    }
    return out;
}

HPReal ln_int(unsigned long k, mpfr_prec_t prec) {
    if (k == 0) throw std::invalid_argument("ln_int: argument must be >= 1");
    HPReal r(prec);
    mpfr_log_ui(r.raw(), k, MPFR_RNDN);
    return r;
}

HPReal const_pi(mpfr_prec_t prec) {
    HPReal r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

HPReal pow_si(const HPReal& base, long e, mpfr_prec_t prec) {
    HPReal r(prec);
    mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
    return r;
}

}  // namespace zetaconst
