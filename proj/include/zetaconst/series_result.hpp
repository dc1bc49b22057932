#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zetaconst/hpreal.hpp"
#include "zetaconst/rational.hpp"

namespace zetaconst {

// Comparison of a partial sum against a named reference constant. `floor`
// is the reference's own uncertainty; a reported difference below the
// floor only means "agrees to the reference's trusted digits".
struct ReferenceComparison {
    std::string name;
    HPReal abs_error;
    double floor = 0.0;
};

struct SeriesResult {
    std::string series_id;
    std::uint64_t terms_used = 0;
    mpfr_prec_t precision_bits = 0;  // requested target precision
    HPReal partial_sum;
    std::vector<Rational> exact_prefix;  // per-term exact values, up to the crossover
    HPReal tail_estimate;                // heuristic, never rigorous
    std::optional<ReferenceComparison> reference;
};

}  // namespace zetaconst
