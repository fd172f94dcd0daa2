// Command-line front end: enumeration, oracles, valley polynomials, special
// sequences, conjecture reports and the instrumented natural merge sort.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "runstruct/natmerge.hpp"
#include "runstruct/operators.hpp"
#include "runstruct/oracle.hpp"
#include "runstruct/sequences.hpp"
#include "runstruct/valleys.hpp"

using namespace runstruct;
using nlohmann::json;

namespace {

constexpr int kExitVerifyFailure = 2;

int default_threads() {
    if (const char* env = std::getenv("RUNSTRUCT_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

std::string partition_label(const Partition& p) {
    std::ostringstream os;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << "+";
        os << parts[i];
    }
    return os.str();
}

void emit_manifest(const json& config, const std::string& format, std::ostream& os) {
    if (format == "json") return;  // embedded in the result object instead
    os << "# config: " << config.dump() << "\n";
}

/// Prints a polynomial in the requested format; used by atoms/circular/linear.
void emit_polynomial(const std::string& label, const RunPolynomial& poly,
                     const std::string& format, bool manifest, const json& config) {
    if (format == "json") {
        json out = {{"name", label}, {"terms", poly.to_json()}};
        if (manifest) out["config"] = config;
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        if (manifest) emit_manifest(config, format, std::cout);
        std::cout << "partition,count\n";
        for (const auto& [p, c] : poly.terms())
            std::cout << partition_label(p) << "," << c.get_str() << "\n";
    } else {
        if (manifest) emit_manifest(config, format, std::cout);
        std::cout << label << " = " << poly.to_string() << "\n";
    }
}

int run_enumerate(const std::string& family, int n, int degree, const std::string& format,
                  bool manifest, int threads) {
    json config = {{"subcommand", family}, {"n", n},       {"degree", degree},
                   {"format", format},     {"manifest", manifest}, {"threads", threads}};
    RunPolynomial poly;
    std::string label;
    if (family == "atoms") {
        poly = atomic_polys(n)[static_cast<std::size_t>(n)];
        label = "A_" + std::to_string(n);
    } else if (family == "circular") {
        if (n < 2) throw CLI::ValidationError("--n", "circular polynomials need n >= 2");
        poly = circular_polys(n)[static_cast<std::size_t>(n)];
        label = "C_" + std::to_string(n);
    } else {
        poly = linear_polys(n)[static_cast<std::size_t>(n)];
        label = "L_" + std::to_string(n);
    }
    if (degree >= 0) {
        poly = poly.degree_part(degree);
        label += "[deg " + std::to_string(degree) + "]";
    }
    emit_polynomial(label, poly, format, manifest, config);
    return 0;
}

PermKind kind_by_name(const std::string& name) {
    if (name == "linear") return PermKind::Linear;
    if (name == "circular") return PermKind::Circular;
    if (name == "atomic") return PermKind::AtomicRising;
    throw CLI::ValidationError("--kind", "unknown kind '" + name + "'");
}

int run_tally(const std::string& kind_name, int n, const std::string& format, bool manifest,
              int threads) {
    json config = {{"subcommand", "tally"}, {"kind", kind_name},   {"n", n},
                   {"format", format},      {"manifest", manifest}, {"threads", threads}};
    auto tally = tally_run_structures(kind_by_name(kind_name), n);
    if (format == "json") {
        json rows = json::array();
        for (const auto& [p, c] : tally)
            rows.push_back({{"partition", json(p.parts())}, {"count", c.get_str()}});
        json out = {{"kind", kind_name}, {"n", n}, {"rows", rows}};
        if (manifest) out["config"] = config;
        std::cout << out.dump(2) << "\n";
    } else {
        if (manifest) emit_manifest(config, format, std::cout);
        std::cout << "partition,count\n";
        for (const auto& [p, c] : tally)
            std::cout << partition_label(p) << "," << c.get_str() << "\n";
    }
    return 0;
}

int run_verify(const std::string& kind_name, int n, bool manifest, int threads) {
    json config = {{"subcommand", "verify"}, {"kind", kind_name},    {"n", n},
                   {"against", "poly"},      {"manifest", manifest}, {"threads", threads}};
    if (manifest) emit_manifest(config, "pretty", std::cout);
    auto kind = kind_by_name(kind_name);
    auto tally = tally_run_structures(kind, n);
    RunPolynomial poly;
    if (kind == PermKind::Linear)
        poly = linear_polys(n - 1)[static_cast<std::size_t>(n - 1)];
    else if (kind == PermKind::Circular)
        poly = circular_polys(n)[static_cast<std::size_t>(n)];
    else
        poly = atomic_polys(n - 1)[static_cast<std::size_t>(n - 1)];
    bool ok = tally.size() == poly.term_count();
    for (const auto& [p, c] : tally) ok = ok && poly.coefficient(p) == c;
    std::cout << (ok ? "PASS" : "FAIL") << ": " << kind_name << " tallies vs coefficients, n = "
              << n << "\n";
    return ok ? 0 : kExitVerifyFailure;
}

int run_valleys(int n, bool table, bool check_closed_form, double nu, double kappa, int order,
                double tol, const std::string& format, bool manifest, int threads) {
    json config = {{"subcommand", "valleys"}, {"n", n},         {"table", table},
                   {"check_closed_form", check_closed_form},    {"nu", nu},
                   {"kappa", kappa},          {"order", order}, {"tol", tol},
                   {"format", format},        {"manifest", manifest}, {"threads", threads}};
    if (check_closed_form) {
        if (manifest) emit_manifest(config, "pretty", std::cout);
        double closed = kitaev_closed_form(nu, kappa);
        double series = kitaev_series(nu, mpq_class(kappa), order);
        double gap = std::abs(closed - series);
        bool ok = gap <= tol;
        std::cout << (ok ? "PASS" : "FAIL") << ": |closed - series| = " << gap << " at nu = "
                  << nu << ", kappa = " << kappa << " (order " << order << ", tol " << tol
                  << ")\n";
        return ok ? 0 : kExitVerifyFailure;
    }
    auto rows = valley_polys_by_recurrence(n);
    if (table) {
        if (format == "json") {
            json out_rows = json::array();
            for (int m = 1; m <= n; ++m)
                for (int k = 0; k <= rows[m].degree(); ++k)
                    out_rows.push_back({{"n", m}, {"k", k}, {"V", rows[m].coeff(k).get_str()}});
            json out = {{"rows", out_rows}};
            if (manifest) out["config"] = config;
            std::cout << out.dump(2) << "\n";
        } else {
            if (manifest) emit_manifest(config, format, std::cout);
            std::cout << "n,k,V\n";
            for (int m = 1; m <= n; ++m)
                for (int k = 0; k <= rows[m].degree(); ++k)
                    std::cout << m << "," << k << "," << rows[m].coeff(k).get_str() << "\n";
        }
        return 0;
    }
    if (format == "json") {
        json coeffs = json::array();
        for (int k = 0; k <= rows[n].degree(); ++k) coeffs.push_back(rows[n].coeff(k).get_str());
        json out = {{"name", "K_" + std::to_string(n)}, {"coeffs", coeffs}};
        if (manifest) out["config"] = config;
        std::cout << out.dump(2) << "\n";
    } else {
        if (manifest) emit_manifest(config, format, std::cout);
        std::cout << "K_" << n << " = " << rows[n].to_string() << "\n";
    }
    return 0;
}

int run_sequences(const std::string& name, int n, const std::string& format, bool manifest,
                  int threads) {
    json config = {{"subcommand", "sequences"}, {"name", name},         {"n", n},
                   {"format", format},          {"manifest", manifest}, {"threads", threads}};
    std::vector<std::pair<int, mpz_class>> values;
    if (name == "secant") {
        auto s = secant_numbers(n);
        for (int i = 0; i <= n; ++i) values.emplace_back(i, s[static_cast<std::size_t>(i)]);
    } else if (name == "tangent") {
        auto t = tangent_numbers(n);
        for (int i = 1; i <= n; ++i) values.emplace_back(i, t[static_cast<std::size_t>(i)]);
    } else if (name == "y") {
        auto y = y_sequence(n);
        for (int i = 1; i <= n; ++i) values.emplace_back(i, y[static_cast<std::size_t>(i - 1)]);
    } else {
        throw CLI::ValidationError("--name", "unknown sequence '" + name + "'");
    }
    if (format == "json") {
        json rows = json::array();
        for (const auto& [i, v] : values) rows.push_back({{"n", i}, {"value", v.get_str()}});
        json out = {{"name", name}, {"rows", rows}};
        if (manifest) out["config"] = config;
        std::cout << out.dump(2) << "\n";
    } else {
        if (manifest) emit_manifest(config, format, std::cout);
        if (format == "csv") std::cout << "n,value\n";
        for (const auto& [i, v] : values)
            std::cout << i << (format == "csv" ? "," : ": ") << v.get_str() << "\n";
    }
    return 0;
}

int run_conjecture(const std::string& family, int n, const std::string& format, bool manifest,
                   int threads) {
    json config = {{"subcommand", "conjecture"}, {"family", family},     {"n", n},
                   {"format", format},           {"manifest", manifest}, {"threads", threads}};
    auto rows = conjecture_report(conjecture_family_by_name(family), n);
    bool all_ok = true;
    if (format == "json") {
        json out_rows = json::array();
        for (const auto& row : rows) {
            all_ok = all_ok && row.consistent;
            out_rows.push_back({{"n", row.n},
                                {"quantity", row.quantity},
                                {"expected", row.expected.get_str()},
                                {"computed", row.computed.get_str()},
                                {"status", row.consistent ? "CONJECTURE-CONSISTENT"
                                                          : "INCONSISTENT"}});
        }
        json out = {{"family", family}, {"rows", out_rows}};
        if (manifest) out["config"] = config;
        std::cout << out.dump(2) << "\n";
    } else {
        if (manifest) emit_manifest(config, format, std::cout);
        for (const auto& row : rows) {
            all_ok = all_ok && row.consistent;
            std::cout << row.quantity << ": expected " << row.expected.get_str() << ", computed "
                      << row.computed.get_str() << " -> "
                      << (row.consistent ? "CONJECTURE-CONSISTENT" : "INCONSISTENT") << "\n";
        }
    }
    return all_ok ? 0 : kExitVerifyFailure;
}

int run_sort(const std::string& input_file, int random_n, unsigned long seed, bool stats_only,
             bool manifest, int threads) {
    json config = {{"subcommand", "sort"}, {"input", input_file},  {"random", random_n},
                   {"seed", seed},         {"stats", stats_only},  {"manifest", manifest},
                   {"threads", threads}};
    std::vector<long> keys;
    if (!input_file.empty()) {
        std::ifstream in(input_file);
        if (!in) throw CLI::ValidationError("--input", "cannot open '" + input_file + "'");
        long v;
        while (in >> v) keys.push_back(v);
    } else {
        std::mt19937_64 rng(seed);
        keys.resize(static_cast<std::size_t>(random_n));
        for (auto& k : keys) k = static_cast<long>(rng() % 1000000000L);
    }
    auto [sorted, stats] = natural_merge_sort(std::move(keys));
    json stats_json = {{"initial_runs", stats.initial_runs},
                       {"merge_passes", stats.merge_passes},
                       {"comparisons", stats.comparisons},
                       {"element_moves", stats.element_moves}};
    if (manifest) stats_json["config"] = config;
    if (stats_only) {
        std::cout << stats_json.dump(2) << "\n";
    } else {
        for (long v : sorted) std::cout << v << "\n";
        std::cerr << stats_json.dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of permutations by run structure"};
    app.require_subcommand(1);

    int threads = default_threads();
    app.add_option("--threads", threads, "parallelism degree (env RUNSTRUCT_THREADS)")
        ->check(CLI::PositiveNumber);

    std::string format = "pretty";
    bool manifest = false;
    int n = 0;
    int degree = -1;

    auto add_common = [&](CLI::App* sub, bool with_degree) {
        sub->add_option("--n", n, "index bound")->required()->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_flag("--manifest", manifest, "emit the effective config with the output");
        if (with_degree)
            sub->add_option("--degree", degree, "restrict to monomials of this degree")
                ->check(CLI::NonNegativeNumber);
    };

    auto* atoms = app.add_subcommand("atoms", "atomic permutation polynomial A_n");
    add_common(atoms, true);
    auto* circular = app.add_subcommand("circular", "circular permutation polynomial C_n");
    add_common(circular, true);
    auto* linear = app.add_subcommand("linear", "linear permutation polynomial L_n");
    add_common(linear, true);

    std::string kind = "linear";
    auto* tally = app.add_subcommand("tally", "brute-force run-structure tallies");
    tally->add_option("--kind", kind, "permutation kind")
        ->check(CLI::IsMember({"linear", "circular", "atomic"}));
    add_common(tally, false);

    std::string against = "poly";
    auto* verify = app.add_subcommand("verify", "check brute-force tallies against coefficients");
    verify->add_option("--against", against, "reference to compare with")
        ->check(CLI::IsMember({"poly"}));
    verify->add_option("--kind", kind, "permutation kind")
        ->check(CLI::IsMember({"linear", "circular", "atomic"}));
    add_common(verify, false);

    bool table = false, check_closed_form = false;
    double nu = 0.05, kappa = 2.0, tol = 1e-9;
    int order = 25;
    auto* valleys = app.add_subcommand("valleys", "valley polynomials K_n");
    add_common(valleys, false);
    valleys->add_flag("--table", table, "emit the V(n,k) table for all n up to --n");
    valleys->add_flag("--check-closed-form", check_closed_form,
                      "compare the closed form against the exact series");
    valleys->add_option("--nu", nu, "series variable for the closed-form check");
    valleys->add_option("--kappa", kappa, "valley weight, must be > 1");
    valleys->add_option("--order", order, "series truncation order")->check(CLI::PositiveNumber);
    valleys->add_option("--tol", tol, "tolerance for the closed-form check")
        ->check(CLI::PositiveNumber);

    std::string seq_name = "secant";
    auto* sequences = app.add_subcommand("sequences", "special integer sequences");
    sequences->add_option("--name", seq_name, "sequence name")
        ->check(CLI::IsMember({"secant", "tangent", "y"}));
    add_common(sequences, false);

    std::string family = "qft-y";
    auto* conjecture = app.add_subcommand("conjecture", "substitution-family consistency report");
    conjecture->add_option("--family", family, "assignment family")
        ->check(CLI::IsMember({"qft-y", "catalan", "x1-only", "ones"}));
    add_common(conjecture, false);

    std::string input_file;
    int random_n = 0;
    unsigned long seed = 1;
    bool stats_only = false;
    auto* sort_cmd = app.add_subcommand("sort", "instrumented natural merge sort");
    sort_cmd->add_option("--input", input_file, "file with one integer per line");
    sort_cmd->add_option("--random", random_n, "sort this many random keys")
        ->check(CLI::PositiveNumber);
    sort_cmd->add_option("--seed", seed, "seed for --random");
    sort_cmd->add_flag("--stats", stats_only, "emit only the JSON statistics");
    sort_cmd->add_flag("--manifest", manifest, "emit the effective config with the output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (atoms->parsed()) return run_enumerate("atoms", n, degree, format, manifest, threads);
        if (circular->parsed())
            return run_enumerate("circular", n, degree, format, manifest, threads);
        if (linear->parsed()) return run_enumerate("linear", n, degree, format, manifest, threads);
        if (tally->parsed()) return run_tally(kind, n, format, manifest, threads);
        if (verify->parsed()) return run_verify(kind, n, manifest, threads);
        if (valleys->parsed())
            return run_valleys(n, table, check_closed_form, nu, kappa, order, tol, format,
                               manifest, threads);
        if (sequences->parsed()) return run_sequences(seq_name, n, format, manifest, threads);
        if (conjecture->parsed()) return run_conjecture(family, n, format, manifest, threads);
        if (sort_cmd->parsed()) {
            if (input_file.empty() && random_n == 0)
                throw CLI::ValidationError("sort", "one of --input or --random is required");
            return run_sort(input_file, random_n, seed, stats_only, manifest, threads);
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
