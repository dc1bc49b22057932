#pragma once

#include <cstddef>

#include "zetaconst/hpreal.hpp"

namespace zetaconst {

// Exact/float crossover for Gregory coefficients: series engines carry G_n
// exactly up to this index and as HPReal beyond it.
inline constexpr std::size_t kGregoryExactCrossover = 64;

// |G_n| as HPReal at (at least) the given working precision. Entries up to
// the crossover are rounded from the exact table; beyond it they come from
// the same recurrence run in HPReal with 2*log2(n) + 32 guard bits on top
// of the working precision. Values are memoized per normalized precision,
// immutable once published, and safe for concurrent reads.
const HPReal& gregory_abs_hp(std::size_t n, mpfr_prec_t working_prec);

// Grows the memo for the given precision up to n_max in one pass.
void gregory_hp_reserve(std::size_t n_max, mpfr_prec_t working_prec);

}  // namespace zetaconst
