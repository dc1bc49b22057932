#pragma once

#include <string>

#include "json.hpp"
#include "zetaconst/oracles.hpp"
#include "zetaconst/series_result.hpp"

namespace zetaconst {

using Json = nlohmann::ordered_json;

// Decimal display contract: values are rendered round-to-nearest at the
// requested digit count, so the printed string is within one unit of its
// last digit; records carry that marker explicitly.
inline constexpr const char* kDecimalNote = "+/-1ulp";

// {series_id, N, precision_bits, partial_sum_decimal, exact_prefix,
//  tail_estimate_decimal, reference_name, abs_error_decimal, decimal_note}
Json to_json(const SeriesResult& r, int digits);

// Lossy projection: no exact-prefix column.
std::string csv_header_series();
std::string to_csv_row(const SeriesResult& r, int digits);

Json to_json(const RelationReport& r, int digits);
Json to_json(const DualityReport& r, int digits);

}  // namespace zetaconst
