// lk verify: run a verification suite and print a report.
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad configuration or runtime error.

#include "lk/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

int max_n_from_env() {
    const char* env = std::getenv("LK_MAX_N");
    if (!env || !*env) return lk::kDefaultMaxN;
    try {
        std::size_t used = 0;
        const int v = std::stoi(env, &used);
        if (used == std::char_traits<char>::length(env)) return v;
    } catch (const std::exception&) {
    }
    throw lk::ConfigError(std::string("LK_MAX_N is not an integer: '") + env + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of invariant subspaces of the Lawrence-Krammer representation"};
    app.require_subcommand(1);
    auto* verify = app.add_subcommand("verify", "Run a verification suite");

    lk::SuiteConfig cfg;
    std::optional<int> n, n_min, n_max, max_n;
    std::string format = "json";
    std::optional<std::string> out_path;

    verify->add_option("--suite", cfg.suite, "Suite to run")->required()->check(CLI::IsMember(lk::suite_names()));
    auto* n_opt = verify->add_option("--n", n, "Single n");
    auto* lo = verify->add_option("--n-min", n_min, "Lower end of an n range");
    auto* hi = verify->add_option("--n-max", n_max, "Upper end of an n range");
    n_opt->excludes(lo)->excludes(hi);
    lo->needs(hi);
    hi->needs(lo);
    verify->add_option("--l", cfg.l, "l as a monomial c*r^k (e.g. r5, -r^3, 1/r^7) or a case tag");
    verify->add_option("--l-case", cfg.l_case, "l case tag (l_eq_r, l_eq_neg_r3, l_eq_inv_r2n3, ...)");
    verify->add_option("--t-case", cfg.t_case, "t case tag (t_eq_inv_qn, ..., t_eq_neg_one)");
    verify->add_option("--field", cfg.field, "ratfunc | cyclotomic:<m> | rational:<p>/<q>");
    verify->add_option("--seed", cfg.seed, "Seed for randomized suites");
    verify->add_option("--trials", cfg.trials, "Trials per n for randomized suites");
    verify->add_option("--max-n", max_n, "Override the desk-scale bound on n (default 8, or LK_MAX_N)");
    verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", out_path, "Write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 exits 0 for --help; every other parse failure is a configuration error.
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        cfg.max_n = max_n ? *max_n : max_n_from_env();
        if (n) {
            cfg.n_min = cfg.n_max = *n;
        } else if (n_min) {
            cfg.n_min = *n_min;
            cfg.n_max = *n_max;
        } else if (cfg.suite == "proof-traces") {
            cfg.n_min = cfg.n_max = 8;
        } else {
            throw lk::ConfigError("--n or --n-min/--n-max is required");
        }

        const lk::SuiteReport report = lk::run_suite(cfg);
        const std::string text =
            lk::emit_report(report, format == "text" ? lk::ReportFormat::text : lk::ReportFormat::json);
        if (out_path) {
            std::ofstream os(*out_path, std::ios::binary);
            if (!os) throw std::runtime_error("cannot open --out '" + *out_path + "'");
            os << text;
        } else {
            std::cout << text;
        }
        return report.pass() ? 0 : 1;
    } catch (const lk::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << verify->help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
