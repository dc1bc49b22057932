#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zetaconst/hpreal.hpp"

namespace zetaconst {

enum class Provenance { paper, derived_oracle };

struct UnknownConstantError : std::out_of_range {
    explicit UnknownConstantError(const std::string& name)
        : std::out_of_range("unknown reference constant '" + name + "'") {}
};

// A named reference constant. `decimal` is a truncated decimal expansion;
// every printed fractional digit is trusted, so the value lies within
// 10^-fractional_digits of the true constant. Comparisons against a
// reference must never claim a tolerance below that uncertainty.
struct ConstantRef {
    std::string name;
    std::string decimal;
    Provenance provenance = Provenance::paper;
    int fractional_digits = 0;

    HPReal value(mpfr_prec_t prec) const { return HPReal::of_decimal(decimal, prec); }
    double uncertainty() const;
    std::string provenance_str() const {
        return provenance == Provenance::paper ? "paper" : "derived-oracle";
    }
};

// Immutable registry of reference constants: the upstream-printed values of
// gamma, gamma_1, gamma_2, delta_1..delta_3 and kappa_1, plus
// independently derived 50-digit entries for pi, ln(2*pi), zeta(2), zeta(3).
const ConstantRef& reference(std::string_view name);
const std::vector<ConstantRef>& reference_all();

}  // namespace zetaconst
