// discrect: exact counting and verification for +-1 matrices whose row and
// column sums all lie in {-1,0,1}.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/capability, 3 I/O.

#include "discrect/alpha.hpp"
#include "discrect/asymptotics.hpp"
#include "discrect/count_cache.hpp"
#include "discrect/engine.hpp"
#include "discrect/formulas.hpp"
#include "discrect/oeis.hpp"
#include "discrect/oracle.hpp"
#include "discrect/verify_suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace {

using namespace discrect;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) out.push_back(std::stoi(item));
    return out;
}

struct CacheConfig {
    std::string path;
    bool paranoid = false;

    std::unique_ptr<cache::CountCache> open() const {
        std::string effective = path;
        if (effective.empty())
            if (auto env = cache::CountCache::env_path()) effective = *env;
        if (effective.empty()) return nullptr;
        return std::make_unique<cache::CountCache>(effective, paranoid);
    }
};

BigCount cached_alpha(cache::CountCache* cache, int rows, int cols) {
    if (cache)
        if (auto hit = cache->get_alpha(rows, cols)) return *hit;
    BigCount value = alpha_best(rows, cols);
    if (cache) cache->put_alpha(rows, cols, value);
    return value;
}

int run_count(int rows, int cols, const std::string& engine_name,
              const CacheConfig& cache_config) {
    BigCount value;
    if (engine_name == "formula") {
        if (rows > 4) {
            std::cerr << "count: the formula engine covers rows <= 4 only (no closed "
                         "form exists beyond that); use --engine dp\n";
            return 2;
        }
        value = rows <= 2   ? formulas::alpha_rows12(cols)
                : rows == 3 ? formulas::alpha_three(cols)
                            : formulas::alpha_four(cols);
    } else if (engine_name == "dp") {
        value = engine::count_good(rows, cols);
    } else if (engine_name == "compressed") {
        value = engine::count_good_compressed(rows, cols);
    } else if (engine_name == "oracle") {
        value = oracle::count_good_oracle(rows, cols);
    } else { // auto: formula when it exists, DP otherwise
        auto cache = cache_config.open();
        value = cached_alpha(cache.get(), rows, cols);
    }
    std::cout << value.str() << '\n';
    return 0;
}

int run_enumerate(int rows, int cols, long limit, const std::string& out_path) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw IoError("enumerate: cannot open '" + out_path + "'");
        out = &file;
    }
    oracle::GoodMatrixStream stream(rows, cols);
    long emitted = 0;
    while (auto m = stream.next()) {
        if (limit >= 0 && emitted >= limit) break;
        write_matrix(*out, *m);
        ++emitted;
    }
    if (!out->good()) throw IoError("enumerate: write failed");
    return 0;
}

int run_verify(const std::string& suite) {
    verify::Report report;
    if (suite == "sequence") report = verify::suite_sequence();
    else if (suite == "identities") report = verify::suite_identities();
    else if (suite == "bijection") report = verify::suite_bijection();
    else if (suite == "majorization") report = verify::suite_majorization();
    else if (suite == "asymptotics") report = verify::suite_asymptotics();
    else {
        std::cerr << "verify: unknown suite '" << suite << "'\n";
        return 2;
    }
    verify::print_report(std::cout, report);
    return verify::all_ok(report) ? 0 : 1;
}

int run_table(int rows_max, int cols_max, const std::string& out_path,
              const CacheConfig& cache_config) {
    std::ofstream out(out_path);
    if (!out) throw IoError("table: cannot open '" + out_path + "' for writing");
    out << "m\\n";
    for (int n = 1; n <= cols_max; ++n) out << ',' << n;
    out << '\n';
    auto cache = cache_config.open();
    for (int m = 1; m <= rows_max; ++m) {
        out << m;
        for (int n = 1; n <= cols_max; ++n)
            out << ',' << cached_alpha(cache.get(), m, n).str();
        out << '\n';
    }
    if (!out) throw IoError("table: write to '" + out_path + "' failed");
    return 0;
}

int run_oeis_check(const std::string& bfile_path, long k_max) {
    const auto entries = oeis::read_bfile(bfile_path);
    if (entries.empty()) {
        std::cout << "checked 0 entries, 0 mismatches\n";
        return 0;
    }
    long top = -1;
    for (const auto& e : entries) {
        if (e.index < 0) {
            std::cerr << "oeis-check: negative index " << e.index << " in b-file\n";
            return 2;
        }
        if (e.index <= k_max) top = std::max(top, e.index);
    }
    long checked = 0, mismatches = 0, skipped = 0;
    const auto alpha3 =
        top >= 0 ? engine::count_good_series(3, static_cast<int>(2 * top))
                 : std::vector<BigCount>{};
    for (const auto& e : entries) {
        if (e.index > k_max) {
            ++skipped;
            continue;
        }
        ++checked;
        const BigCount& computed = alpha3[static_cast<std::size_t>(2 * e.index)];
        if (computed == e.value) {
            std::cout << "ok k=" << e.index << " a(k)=" << e.value.str() << '\n';
        } else {
            ++mismatches;
            std::cout << "MISMATCH k=" << e.index << " bfile=" << e.value.str()
                      << " computed=" << computed.str() << '\n';
        }
    }
    std::cout << "checked " << checked << " entries, " << mismatches << " mismatches";
    if (skipped) std::cout << ", skipped " << skipped << " beyond k-max " << k_max;
    std::cout << '\n';
    return mismatches == 0 ? 0 : 1;
}

int run_asymptotics(const std::string& series_name, int rows, int half_m,
                    const std::string& parity_name, int cols_max, int gap,
                    const std::string& r_text, const std::string& rp_text,
                    const std::string& out_path) {
    using asymptotics::Parity;
    std::vector<asymptotics::SeriesPoint> series;
    std::string target;
    if (series_name == "porp") {
        if (cols_max < 0) cols_max = 100;
        series = asymptotics::ratio_series(rows, cols_max, gap);
        target = asymptotics::porp_target(rows).str();
    } else if (series_name == "oddeven") {
        if (cols_max < 0) cols_max = 99;
        series = asymptotics::oddeven_ratio_series(half_m, cols_max);
        target = decimal_string(to_decimal(asymptotics::oddeven_target(half_m)), 30);
    } else if (series_name == "constant") {
        if (cols_max < 0) cols_max = 200;
        const Parity parity = parity_name == "odd" ? Parity::odd : Parity::even;
        series = asymptotics::normalized_constant_series(rows, parity, cols_max);
        target = decimal_string(asymptotics::constant_target(rows, parity), 30);
    } else if (series_name == "rowprofile") {
        if (cols_max < 0) cols_max = 60;
        if (r_text.empty() || rp_text.empty()) {
            std::cerr << "asymptotics: --series rowprofile needs --r and --r-prime\n";
            return 2;
        }
        series = asymptotics::row_profile_ratio_series(rows, cols_max,
                                                       parse_int_list(r_text),
                                                       parse_int_list(rp_text));
        target = "1";
    } else {
        std::cerr << "asymptotics: unknown series '" << series_name << "'\n";
        return 2;
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw IoError("asymptotics: cannot open '" + out_path + "'");
        out = &file;
    }
    // for sqrt-normalized series the rational columns hold the cofactor and
    // decimal = numerator/denominator * sqrt(n)
    *out << "n,numerator,denominator,decimal,target\n";
    for (const auto& p : series)
        *out << p.n << ',' << boost::multiprecision::numerator(p.rational).str() << ','
             << boost::multiprecision::denominator(p.rational).str() << ','
             << decimal_string(p.decimal(), 30) << ',' << target << '\n';
    if (!out->good()) throw IoError("asymptotics: write failed");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting and verification of minimum-discrepancy +-1 matrices"};
    app.require_subcommand(1);

    CacheConfig cache_config;
    app.add_option("--cache", cache_config.path,
                   "count cache file (default: $DISC_RECT_CACHE when set)");
    app.add_flag("--paranoid", cache_config.paranoid,
                 "recompute and check every cache entry on load");

    auto* count = app.add_subcommand("count", "print alpha(m,n)");
    int rows = 0, cols = 0;
    std::string engine_name = "auto";
    count->add_option("--rows", rows, "m")->required();
    count->add_option("--cols", cols, "n")->required();
    count->add_option("--engine", engine_name, "auto|formula|dp|compressed|oracle")
        ->check(CLI::IsMember({"auto", "formula", "dp", "compressed", "oracle"}));

    auto* enumerate = app.add_subcommand(
        "enumerate", "write the members of A(m,n) in matrix text format");
    int enum_rows = 0, enum_cols = 0;
    long enum_limit = -1;
    std::string enum_out;
    enumerate->add_option("--rows", enum_rows, "m")->required();
    enumerate->add_option("--cols", enum_cols, "n")->required();
    enumerate->add_option("--limit", enum_limit, "stop after this many matrices");
    enumerate->add_option("--out", enum_out, "output path (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify_cmd->add_option("--suite", suite,
                           "sequence|identities|bijection|majorization|asymptotics")
        ->required();

    auto* table = app.add_subcommand("table", "emit a CSV grid of alpha(m,n)");
    int rows_max = 0, cols_max_table = 0;
    std::string table_out;
    table->add_option("--rows-max", rows_max, "largest m")->required();
    table->add_option("--cols-max", cols_max_table, "largest n")->required();
    table->add_option("--out", table_out, "output CSV path")->required();

    auto* oeis_cmd = app.add_subcommand("oeis-check",
                                        "compare a b-file against alpha(3,2k)");
    std::string bfile_path;
    long k_max = 64;
    oeis_cmd->add_option("bfile", bfile_path, "b-file path")->required();
    oeis_cmd->add_option("--k-max", k_max, "largest index to check (default 64)");

    auto* asym = app.add_subcommand("asymptotics", "emit a convergence series as CSV");
    std::string series_name, parity_name = "even", r_text, rp_text, asym_out;
    int asym_rows = 3, half_m = 2, asym_cols_max = -1, gap = 2;
    asym->add_option("--series", series_name, "porp|oddeven|constant|rowprofile")
        ->required();
    asym->add_option("--rows", asym_rows, "m (porp, constant, rowprofile)");
    asym->add_option("--half-m", half_m, "h for the alpha(2h,n)/alpha(2h-1,n) series");
    asym->add_option("--parity", parity_name, "even|odd (constant series)")
        ->check(CLI::IsMember({"even", "odd"}));
    asym->add_option("--cols-max", asym_cols_max, "series end (per-series default)");
    asym->add_option("--gap", gap, "ratio gap (default 2)");
    asym->add_option("--r", r_text, "base profile, comma-separated");
    asym->add_option("--r-prime", rp_text, "compared profile, comma-separated");
    asym->add_option("--out", asym_out, "output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return run_count(rows, cols, engine_name, cache_config);
        if (enumerate->parsed())
            return run_enumerate(enum_rows, enum_cols, enum_limit, enum_out);
        if (verify_cmd->parsed()) return run_verify(suite);
        if (table->parsed())
            return run_table(rows_max, cols_max_table, table_out, cache_config);
        if (oeis_cmd->parsed()) return run_oeis_check(bfile_path, k_max);
        if (asym->parsed())
            return run_asymptotics(series_name, asym_rows, half_m, parity_name,
                                   asym_cols_max, gap, r_text, rp_text, asym_out);
    } catch (const IoError& e) {
        std::cerr << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    return 2;
}
