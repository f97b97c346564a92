// SPDX-License-Identifier: Apache-2.0
#include "hermitian/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "hermitian/closed_form.hpp"
#include "hermitian/counting.hpp"
#include "hermitian/io.hpp"
#include "hermitian/lpolynomial.hpp"
#include "hermitian/verification.hpp"

namespace hermitian {
namespace {

unsigned threads_from_env() {
    const char* env = std::getenv("HERMITIAN_THREADS");
    if (!env) return 1;
    const long v = std::strtol(env, nullptr, 10);
    return v > 0 ? static_cast<unsigned>(v) : 1;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw std::runtime_error("cannot open output file: " + out_path);
    file << text;
}

std::string format_count(const CountRecord& rec, OutputFormat format) {
    std::ostringstream text;
    switch (format) {
        case OutputFormat::json:
            text << to_json(rec).dump() << '\n';
            break;
        case OutputFormat::csv:
            text << count_csv_header() << '\n' << to_csv_row(rec) << '\n';
            break;
        case OutputFormat::table:
            text << std::left << std::setw(6) << "p" << std::setw(4) << "k" << std::setw(4) << "t"
                 << std::setw(8) << "n" << std::setw(12) << "method" << "count\n";
            text << std::left << std::setw(6) << rec.params.p << std::setw(4) << rec.params.k
                 << std::setw(4) << rec.params.t << std::setw(8) << rec.n << std::setw(12)
                 << to_string(rec.method) << rec.count.get_str() << '\n';
            break;
    }
    return text.str();
}

IntPolynomial build_lpoly(const CurveParams& params, std::uint64_t genus_budget,
                          std::uint64_t* genus_out) {
    const mpz_class g = genus(params);
    if (!g.fits_ulong_p() || mpz_get_ui(g.get_mpz_t()) > genus_budget)
        throw budget_error("genus exceeds the coefficient budget");
    const std::uint64_t gu = mpz_get_ui(g.get_mpz_t());
    std::vector<mpz_class> counts;
    counts.reserve(2 * gu);
    for (std::uint64_t n = 1; n <= 2 * gu; ++n)
        counts.push_back(count_closed(params, n).count);
    if (genus_out) *genus_out = gu;
    return lpoly_from_counts(mpz_class(static_cast<unsigned long>(params.p)), gu, counts);
}

int run_count(const CurveParams& params, std::uint64_t n, const std::string& method,
              const Budgets& budgets, OutputFormat format, const std::string& out_path,
              std::ostream& out) {
    CountRecord rec;
    if (method == "brute") {
        rec = count_brute(params, n, budgets);
    } else if (method == "fiber") {
        rec = count_fiber(params, n, budgets);
    } else if (method == "subgroup") {
        rec = count_subgroup(params, n, budgets);
    } else if (method == "closed") {
        rec = count_closed(params, n);
    } else if (method == "corollary12") {
        if (params.t != 1) throw std::invalid_argument("corollary12 evaluates the t = 1 family");
        rec = CountRecord{params, n,
                          count_from_deviation(corollary12_deviation(params.p, params.k, n)),
                          CountMethod::formula};
    } else if (method == "theorem45") {
        if (params.t != 0) throw std::invalid_argument("theorem45 evaluates the t = 0 family");
        rec = CountRecord{params, n,
                          count_from_deviation(theorem45_deviation(params.p, params.k, n)),
                          CountMethod::formula};
    } else if (method == "theorem11") {
        if (params.t < 1) throw std::invalid_argument("theorem11 requires t >= 1");
        rec = CountRecord{
            params, n,
            count_from_deviation(theorem11_deviation(params.p, params.k, params.t, n)),
            CountMethod::formula};
    } else {
        throw std::invalid_argument("unknown method: " + method);
    }
    try {
        validate(rec);  // every emitted count re-passes the Hasse-Weil check
    } catch (const std::logic_error& e) {
        throw std::runtime_error(std::string(e.what()) +
                                 " (the printed formula is off here; run `verify` for the audit)");
    }
    emit(format_count(rec, format), out_path, out);
    return 0;
}

int run_lpoly(const CurveParams& params, std::uint64_t genus_budget, const std::string& out_path,
              std::ostream& out) {
    std::uint64_t g = 0;
    IntPolynomial L = build_lpoly(params, genus_budget, &g);
    const mpz_class q(static_cast<unsigned long>(params.p));
    if (!functional_equation_holds(L, q, g))
        throw std::runtime_error("L-polynomial failed the functional-equation check");
    if (!is_supersingular_lpoly(L, params.p, 1))
        throw std::runtime_error("L-polynomial failed the supersingularity valuation check");
    emit(lpoly_json(L, q, g).dump() + "\n", out_path, out);
    return 0;
}

int run_divides(std::uint64_t p, const CurveParams& a, const CurveParams& b,
                std::uint64_t genus_budget, const std::string& out_path, std::ostream& out) {
    IntPolynomial LA = build_lpoly(a, genus_budget, nullptr);
    IntPolynomial LB = build_lpoly(b, genus_budget, nullptr);
    bool quotient_integral = false;
    const bool result = divides(LA, LB, &quotient_integral);
    const std::uint64_t period_a = minimal_period(weil_spectrum(a));
    const std::uint64_t period_b = minimal_period(weil_spectrum(b));
    json j;
    j["divides"] = result;
    j["period_filter"] = period_b % period_a == 0;
    emit(j.dump() + "\n", out_path, out);
    (void)p;
    return 0;
}

int run_verify(const VerifyConfig& cfg, OutputFormat format, const std::string& out_path,
               std::ostream& out) {
    VerifyReport report = run_verify(cfg);

    std::ostringstream text;
    if (format == OutputFormat::json) {
        json j;
        j["counts"] = json::array();
        for (const auto& rec : report.records) j["counts"].push_back(to_json(rec));
        j["discrepancies"] = json::array();
        for (const auto& row : report.discrepancies) j["discrepancies"].push_back(to_json(row));
        j["suites"] = json::array();
        for (const auto& suite : report.suites) {
            json s;
            s["name"] = suite.name;
            s["checks"] = suite.checks;
            s["failures"] = suite.failures;
            s["notes"] = suite.notes;
            j["suites"].push_back(std::move(s));
        }
        j["passed"] = report.passed();
        text << j.dump() << '\n';
    } else if (format == OutputFormat::csv) {
        text << count_csv_header() << '\n';
        for (const auto& rec : report.records) text << to_csv_row(rec) << '\n';
        text << '\n' << discrepancy_csv_header() << '\n';
        for (const auto& row : report.discrepancies) text << to_csv_row(row) << '\n';
    } else {
        for (const auto& suite : report.suites) {
            text << suite.name << ": " << (suite.failures == 0 ? "ok" : "FAILED") << " ("
                 << suite.checks << " checks, " << suite.failures << " failures)\n";
            for (const auto& note : suite.notes) text << "  " << note << '\n';
        }
    }
    emit(text.str(), out_path, out);

    std::uint64_t checks = 0, failures = 0;
    for (const auto& suite : report.suites) {
        checks += suite.checks;
        failures += suite.failures;
    }
    std::uint64_t disagreements = 0;
    for (const auto& row : report.discrepancies) disagreements += !row.agree;
    out << "verify: " << (report.passed() ? "PASS" : "FAIL") << " (" << checks << " checks, "
        << failures << " failures, " << disagreements << " printed-formula discrepancies)\n";
    return report.passed() ? 0 : 1;
}

int run_bench(const CurveParams& params, std::uint64_t n_min, std::uint64_t n_max,
              const Budgets& budgets, const std::string& out_path, std::ostream& out) {
    using clock = std::chrono::steady_clock;
    std::ostringstream text;
    text << "method,pn,seconds\n";
    for (std::uint64_t n = n_min; n <= n_max; ++n) {
        mpz_class pn;
        mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(params.p),
                      static_cast<unsigned long>(n));
        const bool fits = pn.fits_ulong_p();
        const std::uint64_t q = fits ? mpz_get_ui(pn.get_mpz_t()) : 0;
        for (const char* method : {"brute", "fiber", "subgroup", "closed"}) {
            const std::string name = method;
            try {
                if (name == "brute" && (!fits || q > budgets.brute_pairs / q)) continue;
                if ((name == "fiber" || name == "subgroup") &&
                    (!fits || q > budgets.enum_elements))
                    continue;
                const auto start = clock::now();
                if (name == "brute")
                    count_brute(params, n, budgets);
                else if (name == "fiber")
                    count_fiber(params, n, budgets);
                else if (name == "subgroup")
                    count_subgroup(params, n, budgets);
                else
                    count_closed(params, n);
                const double seconds =
                    std::chrono::duration<double>(clock::now() - start).count();
                text << name << ',' << pn.get_str() << ',' << std::fixed << std::setprecision(6)
                     << seconds << '\n';
            } catch (const budget_error&) {
                // out-of-budget rows are simply omitted
            }
        }
    }
    emit(text.str(), out_path, out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact point counts, L-polynomials and Weil spectra of the curves "
                 "y^(p^k) + y = x^(p^(kt)+1)"};
    app.require_subcommand(1);

    Budgets budgets;
    std::string format_name = "json";
    std::string out_path;
    unsigned threads = threads_from_env();

    // count
    auto* count_cmd = app.add_subcommand("count", "count rational points over F_{p^n}");
    std::uint64_t p = 2;
    unsigned k = 1, t = 1;
    std::uint64_t n = 1;
    std::string method = "closed";
    count_cmd->add_option("--p", p, "characteristic (prime)")->required();
    count_cmd->add_option("--k", k, "Frobenius power k >= 1");
    count_cmd->add_option("--t", t, "exponent parameter t >= 0");
    count_cmd->add_option("--n", n, "extension degree")->required();
    count_cmd->add_option("--method", method,
                          "brute|fiber|subgroup|closed|corollary12|theorem45|theorem11");
    count_cmd->add_option("--budget-brute", budgets.brute_pairs, "cap on p^(2n) for brute");
    count_cmd->add_option("--budget-enum", budgets.enum_elements, "cap on p^n for enumeration");
    count_cmd->add_option("--format", format_name, "json|csv|table");
    count_cmd->add_option("--out", out_path, "write output to this path");

    // lpoly
    auto* lpoly_cmd = app.add_subcommand("lpoly", "L-polynomial from closed-form counts");
    std::uint64_t genus_budget = 64;
    lpoly_cmd->add_option("--p", p, "characteristic (prime)")->required();
    lpoly_cmd->add_option("--k", k, "Frobenius power k >= 1");
    lpoly_cmd->add_option("--t", t, "exponent parameter t >= 0");
    lpoly_cmd->add_option("--budget-genus", genus_budget, "cap on the genus");
    lpoly_cmd->add_option("--out", out_path, "write output to this path");

    // divides
    auto* divides_cmd = app.add_subcommand("divides", "exact L-polynomial divisibility");
    unsigned ka = 1, ta = 1, kb = 1, tb = 1;
    std::uint64_t divides_genus_budget = 1024;
    divides_cmd->add_option("--p", p, "characteristic (prime)")->required();
    divides_cmd->add_option("--ka", ka, "k of the candidate divisor")->required();
    divides_cmd->add_option("--ta", ta, "t of the candidate divisor");
    divides_cmd->add_option("--kb", kb, "k of the dividend")->required();
    divides_cmd->add_option("--tb", tb, "t of the dividend");
    divides_cmd->add_option("--budget-genus", divides_genus_budget, "cap on either genus");
    divides_cmd->add_option("--out", out_path, "write output to this path");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "batch cross-validation report");
    VerifyConfig vcfg;
    verify_cmd->add_option("--p", vcfg.primes, "primes to test");
    verify_cmd->add_option("--k", vcfg.k_max, "largest k");
    verify_cmd->add_option("--t", vcfg.t_max, "largest t");
    verify_cmd->add_option("--field-cap", vcfg.field_cap, "largest enumerated field size p^n");
    verify_cmd->add_option("--n-max", vcfg.n_max, "hard cap on the extension degree (0 = auto)");
    verify_cmd->add_option("--budget-brute", vcfg.budgets.brute_pairs, "cap on p^(2n) for brute");
    verify_cmd->add_option("--budget-enum", vcfg.budgets.enum_elements,
                           "cap on p^n for enumeration");
    verify_cmd->add_option("--threads", threads, "worker threads (env HERMITIAN_THREADS)");
    verify_cmd->add_option("--format", format_name, "json|csv|table");
    verify_cmd->add_option("--out", out_path, "write the report to this path");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "wall-clock comparison of the counters");
    std::uint64_t bench_n_min = 1, bench_n_max = 20;
    bench_cmd->add_option("--p", p, "characteristic (prime)")->required();
    bench_cmd->add_option("--k", k, "Frobenius power k >= 1");
    bench_cmd->add_option("--t", t, "exponent parameter t >= 0");
    bench_cmd->add_option("--n", bench_n_min, "first extension degree");
    bench_cmd->add_option("--n-max", bench_n_max, "last extension degree");
    bench_cmd->add_option("--budget-brute", budgets.brute_pairs, "cap on p^(2n) for brute");
    bench_cmd->add_option("--budget-enum", budgets.enum_elements, "cap on p^n for enumeration");
    bench_cmd->add_option("--out", out_path, "write output to this path");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("hermitian");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        const OutputFormat format = output_format_from_string(format_name);
        if (count_cmd->parsed())
            return run_count(CurveParams{p, k, t}, n, method, budgets, format, out_path, out);
        if (lpoly_cmd->parsed())
            return run_lpoly(CurveParams{p, k, t}, genus_budget, out_path, out);
        if (divides_cmd->parsed())
            return run_divides(p, CurveParams{p, ka, ta}, CurveParams{p, kb, tb},
                               divides_genus_budget, out_path, out);
        if (verify_cmd->parsed()) {
            vcfg.threads = threads;
            return run_verify(vcfg, format, out_path, out);
        }
        if (bench_cmd->parsed())
            return run_bench(CurveParams{p, k, t}, bench_n_min, bench_n_max, budgets, out_path,
                             out);
        err << "no subcommand selected\n";
        return 1;
    } catch (const budget_error& e) {
        err << "budget error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace hermitian
