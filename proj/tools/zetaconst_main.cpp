// Command-line front end: compute the registered constants by any of their
// series, dump the exact tables, run the verification suites, and race
// series against each other. JSON is the canonical output format; CSV is a
// lossy projection; plain is for eyeballs.
//
// Exit codes: 0 success, 1 check failure, 2 usage error.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zetaconst/constants.hpp"
#include "zetaconst/exact_tables.hpp"
#include "zetaconst/gregory_hp.hpp"
#include "zetaconst/report.hpp"
#include "zetaconst/series.hpp"
#include "zetaconst/sigma.hpp"
#include "zetaconst/verification.hpp"

namespace zc = zetaconst;

namespace {

struct OutputTarget {
    std::string path;
    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file.is_open()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
        }
        return file;
    }
    std::ofstream file;
};

mpfr_prec_t precision_for_digits(int digits) {
    mpfr_prec_t bits = static_cast<mpfr_prec_t>((static_cast<long>(digits) * 3322 + 999) / 1000 + 32);
    return bits < 128 ? 128 : bits;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

using Evaluator = std::function<zc::SeriesResult(std::uint64_t N, std::uint64_t inner, mpfr_prec_t prec)>;

// (constant, series) pairs the `constant` and `race` subcommands accept.
// For the double series (stirling/bell/euler-sum) N is the outer
// truncation and `inner` caps the k = 2 inner sum.
const std::map<std::pair<std::string, std::string>, Evaluator>& evaluator_table() {
    static const std::map<std::pair<std::string, std::string>, Evaluator> table = {
        {{"gamma", "fontana"}, [](auto N, auto, auto p) { return zc::gamma_fontana(N, p); }},
        {{"gamma", "product"}, [](auto N, auto, auto p) { return zc::gamma_product_series(N, p); }},
        {{"ln2pi", "product"}, [](auto N, auto, auto p) { return zc::ln2pi_product_series(N, p); }},
        {{"delta1", "product"}, [](auto N, auto, auto p) { return zc::delta1_product_series(N, p); }},
        {{"delta1", "log"}, [](auto N, auto, auto p) { return zc::delta_log_series(1, N, p); }},
        {{"gamma1", "product"}, [](auto N, auto, auto p) { return zc::gamma1_product_series(N, p); }},
        {{"gamma1", "log"}, [](auto N, auto, auto p) { return zc::gamma_log_series(1, N, p); }},
        {{"gamma2", "kernel"}, [](auto N, auto, auto p) { return zc::gamma2_kernel_series(N, p); }},
        {{"gamma2", "log"}, [](auto N, auto, auto p) { return zc::gamma_log_series(2, N, p); }},
        {{"delta2", "kernel"}, [](auto N, auto, auto p) { return zc::delta2_kernel_series(N, p); }},
        {{"delta2", "log"}, [](auto N, auto, auto p) { return zc::delta_log_series(2, N, p); }},
        {{"delta3", "log"}, [](auto N, auto, auto p) { return zc::delta_log_series(3, N, p); }},
        {{"kappa0", "def"}, [](auto N, auto, auto p) { return zc::kappa_def_series(0, N, p); }},
        {{"kappa1", "def"}, [](auto N, auto, auto p) { return zc::kappa_def_series(1, N, p); }},
        {{"kappa1", "stirling"},
         [](auto N, auto inner, auto p) { return zc::kappa_stirling_series(1, static_cast<unsigned>(N), inner, p); }},
        {{"kappa1", "bell"},
         [](auto N, auto inner, auto p) { return zc::kappa_bell_series(1, static_cast<unsigned>(N), inner, p); }},
        {{"kappa1", "euler-sum"},
         [](auto N, auto inner, auto p) { return zc::kappa1_euler_series(static_cast<unsigned>(N), inner, p); }},
        {{"kappa2", "def"}, [](auto N, auto, auto p) { return zc::kappa_def_series(2, N, p); }},
        {{"kappa2", "stirling"},
         [](auto N, auto inner, auto p) { return zc::kappa_stirling_series(2, static_cast<unsigned>(N), inner, p); }},
        {{"kappa3", "def"}, [](auto N, auto, auto p) { return zc::kappa_def_series(3, N, p); }},
        {{"zeta2", "gregory"}, [](auto N, auto, auto p) { return zc::zeta_gregory_result(2, N, p); }},
        {{"zeta3", "gregory"}, [](auto N, auto, auto p) { return zc::zeta_gregory_result(3, N, p); }},
        {{"gn-harmonic", "direct"}, [](auto N, auto, auto p) { return zc::gregory_harmonic_series(N, p); }},
        {{"gn-shift", "direct"}, [](auto N, auto, auto p) { return zc::gregory_shift_series(N, p); }},
    };
    return table;
}

void list_pairs(std::ostream& os) {
    os << "valid (constant, series) pairs:\n";
    for (const auto& [key, _] : evaluator_table()) os << "  " << key.first << " " << key.second << "\n";
}

int cmd_gregory(std::uint64_t n_max, const std::string& format, OutputTarget& out, int digits) {
    std::ostream& os = out.stream();
    if (format == "json") {
        zc::Json rows = zc::Json::array();
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            zc::Json row;
            row["n"] = n;
            bool exact = n <= zc::kGregoryExactCrossover;
            row["exact"] = exact ? zc::Json(zc::gregory(n).to_string()) : zc::Json(nullptr);
            zc::HPReal v = exact ? zc::HPReal::of(zc::gregory(n), 128) : zc::HPReal(128);
            if (!exact) {
                v = zc::gregory_abs_hp(n, 128).rounded_to(128);
                if (n % 2 == 0) v.negate();
            }
            row["decimal"] = v.decimal(digits);
            row["carrier"] = exact ? "exact" : "float";
            rows.push_back(std::move(row));
        }
        zc::Json j;
        j["table"] = "gregory";
        j["rows"] = std::move(rows);
        j["decimal_note"] = zc::kDecimalNote;
        os << j.dump(2) << "\n";
    } else {
        if (format == "csv") os << "n,exact,decimal,carrier\n";
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            bool exact = n <= zc::kGregoryExactCrossover;
            zc::HPReal v(128);
            std::string exact_str;
            if (exact) {
                exact_str = zc::gregory(n).to_string();
                v = zc::HPReal::of(zc::gregory(n), 128);
            } else {
                v = zc::gregory_abs_hp(n, 128).rounded_to(128);
                if (n % 2 == 0) v.negate();
            }
            if (format == "csv")
                os << n << "," << exact_str << "," << v.decimal(digits) << "," << (exact ? "exact" : "float") << "\n";
            else
                os << n << "\t" << (exact ? exact_str : "(float-carried)") << "\t" << v.decimal(digits) << "\n";
        }
    }
    return 0;
}

int cmd_stirling(std::uint64_t n_max, const std::string& format, OutputTarget& out) {
    std::ostream& os = out.stream();
    if (format == "json") {
        zc::Json rows = zc::Json::array();
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            zc::Json row = zc::Json::array();
            for (std::uint64_t l = 1; l <= n; ++l) row.push_back(zc::stirling1(n, static_cast<long>(l)).get_str());
            rows.push_back(std::move(row));
        }
        zc::Json j;
        j["table"] = "stirling1";
        j["rows"] = std::move(rows);
        os << j.dump(2) << "\n";
    } else {
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            for (std::uint64_t l = 1; l <= n; ++l) {
                if (l > 1) os << (format == "csv" ? "," : "\t");
                os << zc::stirling1(n, static_cast<long>(l)).get_str();
            }
            os << "\n";
        }
    }
    return 0;
}

int cmd_sigma(unsigned k_max, std::uint64_t N, unsigned kernel_max, const std::string& format,
              OutputTarget& out, int digits) {
    std::ostream& os = out.stream();
    zc::Json rows = zc::Json::array();
    for (unsigned k = 1; k <= k_max; ++k) {
        zc::HPReal closed = zc::sigma_closed(k, precision_for_digits(digits));
        zc::SeriesResult ser = zc::sigma_series(k, N);
        zc::Json row;
        row["k"] = k;
        row["closed_decimal"] = closed.decimal(digits);
        row["series_partial_decimal"] = ser.partial_sum.decimal(digits);
        row["series_terms"] = N;
        row["abs_difference_decimal"] = abs_diff(closed, ser.partial_sum).decimal(3);
        row["tail_estimate_decimal"] = ser.tail_estimate.decimal(3);
        rows.push_back(std::move(row));
    }
    zc::Json kern = zc::Json::array();
    for (unsigned m = 1; m <= kernel_max; ++m) {
        zc::Json row;
        row["m"] = m;
        row["lnsq_kernel_decimal"] = zc::lnsq_kernel(m, precision_for_digits(digits)).decimal(digits);
        kern.push_back(std::move(row));
    }
    if (format == "json") {
        zc::Json j;
        j["sigma"] = std::move(rows);
        if (kernel_max > 0) j["lnsq_kernel"] = std::move(kern);
        j["decimal_note"] = zc::kDecimalNote;
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << "k,closed,series_partial,abs_difference,tail_estimate\n";
        for (const auto& row : rows)
            os << row["k"] << "," << row["closed_decimal"].get<std::string>() << ","
               << row["series_partial_decimal"].get<std::string>() << ","
               << row["abs_difference_decimal"].get<std::string>() << ","
               << row["tail_estimate_decimal"].get<std::string>() << "\n";
        for (const auto& row : kern)
            os << "kernel-" << row["m"] << ",," << row["lnsq_kernel_decimal"].get<std::string>() << ",,\n";
    } else {
        for (const auto& row : rows)
            os << "sigma_" << row["k"] << " = " << row["closed_decimal"].get<std::string>()
               << "  series(" << N << ") = " << row["series_partial_decimal"].get<std::string>()
               << "  |diff| = " << row["abs_difference_decimal"].get<std::string>() << "\n";
        for (const auto& row : kern)
            os << "lnsq_kernel(" << row["m"] << ") = " << row["lnsq_kernel_decimal"].get<std::string>() << "\n";
    }
    return 0;
}

int cmd_constant(const std::string& name, const std::string& series, std::uint64_t N, std::uint64_t inner,
                 int digits, const std::string& format, OutputTarget& out) {
    auto it = evaluator_table().find({name, series});
    if (it == evaluator_table().end()) {
        std::cerr << "unknown pair (" << name << ", " << series << ")\n";
        list_pairs(std::cerr);
        return 2;
    }
    auto t0 = std::chrono::steady_clock::now();
    zc::SeriesResult r = it->second(N, inner, precision_for_digits(digits));
    double ms = ms_since(t0);
    std::ostream& os = out.stream();
    if (format == "json") {
        zc::Json j = zc::to_json(r, digits);
        j["timing_ms"] = ms;
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << zc::csv_header_series() << "\n" << zc::to_csv_row(r, digits) << "\n";
    } else {
        os << r.series_id << " (N = " << r.terms_used << "): " << r.partial_sum.decimal(digits) << "\n";
        if (r.reference)
            os << "  vs " << r.reference->name << ": |err| = " << r.reference->abs_error.decimal(3) << "\n";
        os << "  tail estimate: " << r.tail_estimate.decimal(3) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& format, OutputTarget& out) {
    std::vector<zc::CheckResult> results = zc::run_suite(suite);
    std::ostream& os = out.stream();
    bool all_pass = true;
    if (format == "json") {
        zc::Json rows = zc::Json::array();
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            zc::Json row;
            row["check"] = r.id;
            row["pass"] = r.pass;
            row["detail"] = r.detail;
            rows.push_back(std::move(row));
        }
        zc::Json j;
        j["suite"] = suite;
        j["checks"] = std::move(rows);
        j["pass"] = all_pass;
        os << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            os << (r.pass ? "PASS" : "FAIL") << "  " << r.id;
            if (!r.detail.empty()) os << "  (" << r.detail << ")";
            os << "\n";
        }
        os << (all_pass ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_race(const std::string& name, const std::vector<std::string>& series,
             const std::vector<std::uint64_t>& schedule, std::uint64_t inner, int digits,
             const std::string& format, OutputTarget& out) {
    if (series.size() < 2) {
        std::cerr << "race needs at least two series for '" << name << "'\n";
        return 2;
    }
    for (const auto& s : series)
        if (evaluator_table().find({name, s}) == evaluator_table().end()) {
            std::cerr << "unknown pair (" << name << ", " << s << ")\n";
            list_pairs(std::cerr);
            return 2;
        }
    zc::Json rows = zc::Json::array();
    for (std::uint64_t N : schedule) {
        zc::Json row;
        row["N"] = N;
        zc::Json per = zc::Json::object();
        for (const auto& s : series) {
            auto t0 = std::chrono::steady_clock::now();
            zc::SeriesResult r = evaluator_table().at({name, s})(N, inner, precision_for_digits(digits));
            double ms = ms_since(t0);
            zc::Json cell;
            cell["abs_error"] = r.reference ? zc::Json(r.reference->abs_error.decimal(3)) : zc::Json(nullptr);
            cell["partial_sum"] = r.partial_sum.decimal(digits);
            cell["timing_ms"] = ms;
            per[s] = std::move(cell);
        }
        row["series"] = std::move(per);
        rows.push_back(std::move(row));
    }
    std::ostream& os = out.stream();
    if (format == "json") {
        zc::Json j;
        j["constant"] = name;
        j["race"] = std::move(rows);
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << "N,series,abs_error,timing_ms\n";
        for (const auto& row : rows)
            for (const auto& s : series) {
                const auto& cell = row["series"][s];
                os << row["N"] << "," << s << ","
                   << (cell["abs_error"].is_null() ? "" : cell["abs_error"].get<std::string>()) << ","
                   << cell["timing_ms"].dump() << "\n";
            }
    } else {
        for (const auto& row : rows) {
            os << "N = " << row["N"] << "\n";
            for (const auto& s : series) {
                const auto& cell = row["series"][s];
                os << "  " << s << ": |err| = "
                   << (cell["abs_error"].is_null() ? std::string("n/a") : cell["abs_error"].get<std::string>())
                   << "  (" << cell["timing_ms"].dump() << " ms)\n";
            }
        }
    }
    return 0;
}

int cmd_registry(const std::string& format, OutputTarget& out) {
    std::ostream& os = out.stream();
    if (format == "json") {
        zc::Json rows = zc::Json::array();
        for (const auto& c : zc::reference_all()) {
            zc::Json row;
            row["name"] = c.name;
            row["decimal"] = c.decimal;
            row["provenance"] = c.provenance_str();
            row["digits"] = c.fractional_digits;
            rows.push_back(std::move(row));
        }
        zc::Json j;
        j["registry"] = std::move(rows);
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << "name,decimal,provenance,digits\n";
        for (const auto& c : zc::reference_all())
            os << c.name << "," << c.decimal << "," << c.provenance_str() << "," << c.fractional_digits << "\n";
    } else {
        for (const auto& c : zc::reference_all())
            os << c.name << " = " << c.decimal << "  [" << c.provenance_str() << ", " << c.fractional_digits
               << " digits]\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-rational and arbitrary-precision series for zeta-related constants"};
    app.require_subcommand(1);

    std::string format = "plain";
    std::string out_path;
    int digits = 20;
    std::uint64_t terms = 2000;
    std::uint64_t inner = 2000000;

    auto add_common = [&](CLI::App* sub, bool with_terms) {
        sub->add_option("-f,--format", format, "output format")->check(CLI::IsMember({"json", "csv", "plain"}));
        sub->add_option("-o,--out", out_path, "output path (default stdout)");
        sub->add_option("-d,--digits", digits, "decimal digits to print")->check(CLI::Range(6, 1000));
        if (with_terms) sub->add_option("-n,--terms", terms, "number of series terms");
    };

    auto* greg = app.add_subcommand("gregory", "dump the Gregory coefficient table");
    add_common(greg, true);

    auto* stir = app.add_subcommand("stirling", "dump the Stirling (first kind) triangle");
    add_common(stir, true);

    unsigned sigma_kmax = 10;
    unsigned kernel_max = 0;
    auto* sig = app.add_subcommand("sigma", "sigma_k closed form vs series, and ln^2 kernel values");
    add_common(sig, true);
    sig->add_option("-k,--k-max", sigma_kmax, "largest k");
    sig->add_option("--kernel", kernel_max, "also print lnsq kernel values up to this m");

    std::string const_name, const_series = "fontana";
    auto* con = app.add_subcommand("constant", "evaluate a constant by a registered series");
    add_common(con, true);
    con->add_option("name", const_name, "constant name")->required();
    con->add_option("--series", const_series, "series id for the constant");
    con->add_option("--inner", inner, "inner truncation cap for the double series");

    std::string suite = "all";
    auto* ver = app.add_subcommand("verify", "run the verification suites");
    add_common(ver, false);
    ver->add_option("--suite", suite, "exact | identities | numeric | all")
        ->check(CLI::IsMember(zc::suite_names()));

    std::string race_name;
    std::vector<std::string> race_series;
    std::vector<std::uint64_t> race_schedule = {100, 1000, 5000};
    auto* race = app.add_subcommand("race", "compare several series for one constant over a term schedule");
    add_common(race, false);
    race->add_option("name", race_name, "constant name")->required();
    race->add_option("--series", race_series, "two or more series ids")->required()->expected(-2);
    race->add_option("--schedule", race_schedule, "term counts to race at");
    race->add_option("--inner", inner, "inner truncation cap for the double series");

    auto* reg = app.add_subcommand("registry", "dump the reference-constant registry");
    add_common(reg, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    OutputTarget out{out_path};
    try {
        if (greg->parsed()) {
            if (terms < 1) throw std::invalid_argument("gregory: --terms must be >= 1");
            return cmd_gregory(terms, format, out, digits);
        }
        if (stir->parsed()) return cmd_stirling(terms, format, out);
        if (sig->parsed()) return cmd_sigma(sigma_kmax, terms, kernel_max, format, out, digits);
        if (con->parsed()) return cmd_constant(const_name, const_series, terms, inner, digits, format, out);
        if (ver->parsed()) return cmd_verify(suite, format, out);
        if (race->parsed()) return cmd_race(race_name, race_series, race_schedule, inner, digits, format, out);
        if (reg->parsed()) return cmd_registry(format, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
