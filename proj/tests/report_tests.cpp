#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zetaconst/report.hpp"
#include "zetaconst/series.hpp"
#include "zetaconst/verification.hpp"

using namespace zetaconst;

TEST_CASE("series record carries the stable schema") {
    SeriesResult r = gamma_fontana(100);
    Json j = to_json(r, 20);
    for (const char* key : {"series_id", "N", "precision_bits", "partial_sum_decimal", "exact_prefix",
                            "tail_estimate_decimal", "reference_name", "abs_error_decimal", "decimal_note"})
        CHECK(j.contains(key));
    CHECK(j["series_id"] == "fontana");
    CHECK(j["N"] == 100);
    CHECK(j["exact_prefix"].size() == 64);
    CHECK(j["exact_prefix"][0] == "1/2");
    CHECK(j["reference_name"] == "gamma");
    CHECK(j["decimal_note"] == "+/-1ulp");
}

TEST_CASE("identical runs serialize byte-identically") {
    Json a = to_json(gamma_fontana(200), 20);
    Json b = to_json(gamma_fontana(200), 20);
    CHECK(a.dump(2) == b.dump(2));
    Json c = to_json(sigma_series(3, 150), 20);
    Json d = to_json(sigma_series(3, 150), 20);
    CHECK(c.dump(2) == d.dump(2));
}

TEST_CASE("csv is a lossy projection") {
    SeriesResult r = ln2pi_product_series(50);
    std::string row = to_csv_row(r, 20);
    CHECK(row.find("ln2pi-product,50,128,") == 0);
    CHECK(row.find("1/24") == std::string::npos);  // no exact prefix in csv
    CHECK(csv_header_series().find("series_id") == 0);
}

TEST_CASE("relation and duality records serialize") {
    Json j = to_json(relation_check("delta1"), 20);
    CHECK(j["relation_id"] == "delta1");
    CHECK(j["inputs"].size() == 1);
    Json d = to_json(stirling_duality_check(2, 1), 20);
    CHECK(d["pass"] == true);
    CHECK(d["k"] == 2);
}

TEST_CASE("exact verification suite passes") {
    for (const auto& r : run_suite("exact")) {
        INFO(r.id, ": ", r.detail);
        CHECK(r.pass);
    }
    CHECK_THROWS_AS(run_suite("bogus"), std::invalid_argument);
}
