#include "zetaconst/report.hpp"

namespace zetaconst {

Json to_json(const SeriesResult& r, int digits) {
    Json j;
    j["series_id"] = r.series_id;
    j["N"] = r.terms_used;
    j["precision_bits"] = static_cast<long>(r.precision_bits);
    j["partial_sum_decimal"] = r.partial_sum.decimal(digits);
    Json prefix = Json::array();
    for (const auto& t : r.exact_prefix) prefix.push_back(t.to_string());
    j["exact_prefix"] = std::move(prefix);
    j["tail_estimate_decimal"] = r.tail_estimate.decimal(3);
    if (r.reference) {
        j["reference_name"] = r.reference->name;
        j["abs_error_decimal"] = r.reference->abs_error.decimal(3);
        j["reference_uncertainty"] = r.reference->floor;
    } else {
        j["reference_name"] = nullptr;
        j["abs_error_decimal"] = nullptr;
        j["reference_uncertainty"] = nullptr;
    }
    j["decimal_note"] = kDecimalNote;
    return j;
}

std::string csv_header_series() {
    return "series_id,N,precision_bits,partial_sum,tail_estimate,reference_name,abs_error";
}

std::string to_csv_row(const SeriesResult& r, int digits) {
    std::string row = r.series_id + "," + std::to_string(r.terms_used) + "," +
                      std::to_string(static_cast<long>(r.precision_bits)) + "," +
                      r.partial_sum.decimal(digits) + "," + r.tail_estimate.decimal(3) + ",";
    if (r.reference)
        row += r.reference->name + "," + r.reference->abs_error.decimal(3);
    else
        row += ",";
    return row;
}

Json to_json(const RelationReport& r, int digits) {
    Json j;
    j["relation_id"] = r.relation_id;
    j["inputs"] = r.inputs;
    j["computed_decimal"] = r.computed.decimal(digits);
    j["target_decimal"] = r.target.decimal(digits);
    j["abs_difference_decimal"] = r.abs_difference.decimal(3);
    j["weakest_input_digits"] = r.weakest_input_digits;
    j["decimal_note"] = kDecimalNote;
    return j;
}

Json to_json(const DualityReport& r, int digits) {
    Json j;
    j["k"] = r.k;
    j["m"] = r.m;
    j["lhs_decimal"] = r.lhs.decimal(digits);
    j["rhs_decimal"] = r.rhs.decimal(digits);
    j["abs_difference_decimal"] = r.abs_difference.decimal(3);
    j["combined_tail_decimal"] = r.combined_tail.decimal(3);
    j["lhs_terms"] = r.lhs_terms;
    j["rhs_terms"] = r.rhs_terms;
    j["pass"] = r.pass;
    return j;
}

}  // namespace zetaconst
