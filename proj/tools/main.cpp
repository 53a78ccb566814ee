#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "terracini/cli.hpp"

using namespace terracini;

int main(int argc, char** argv) {
    CLI::App app{
        "terracini: expected length of the Terracini scheme of a smooth non-degenerate\n"
        "curve of degree d and genus g in P^{3n-2}, as an exact polynomial in d and g."};
    app.require_subcommand(1);

    int n = 2, max_n = 8;
    std::string formula_fmt = "text", eval_fmt = "text", table_fmt = "csv",
                verify_fmt = "text", oracle_fmt = "text";
    std::string d_str = "0", g_str = "0";
    std::string d_range = "4..8", g_range = "0..0";
    int oracle_d = 5, oracle_range = 10, trials = 1;
    std::uint64_t seed = 1;
    double tol = 1e-8;
    int verify_max_n = 6;

    CLI::App* formula = app.add_subcommand("formula", "closed formula t(C) for a given n");
    formula->add_option("--n", n, "number of points (curve in P^{3n-2})")->required();
    formula->add_option("--format", formula_fmt, "text|json|latex");
    formula->add_option("--max-n", max_n, "resource cap on n");

    CLI::App* eval = app.add_subcommand("eval", "evaluate t(C) at numeric d, g");
    eval->add_option("--n", n, "number of points")->required();
    eval->add_option("--d", d_str, "degree (integer or rational)")->required();
    eval->add_option("--g", g_str, "genus (integer or rational)")->required();
    eval->add_option("--format", eval_fmt, "text|json");
    eval->add_option("--max-n", max_n, "resource cap on n");

    CLI::App* table = app.add_subcommand("table", "grid of exact values over d and g ranges");
    table->add_option("--n", n, "number of points")->required();
    table->add_option("--d", d_range, "degree range A..B")->required();
    table->add_option("--g", g_range, "genus range A..B")->required();
    table->add_option("--format", table_fmt, "csv|json");
    table->add_option("--max-n", max_n, "resource cap on n");

    CLI::App* verify = app.add_subcommand("verify", "run every internal cross-check");
    verify->add_option("--max-n", verify_max_n, "check n = 2..max_n");
    verify->add_option("--format", verify_fmt, "text|json");

    CLI::App* oracle =
        app.add_subcommand("oracle", "brute-force count for random rational curves in P^4");
    oracle->add_option("--d", oracle_d, "curve degree (>= 4)")->required();
    oracle->add_option("--seed", seed, "base RNG seed")->required();
    oracle->add_option("--range", oracle_range, "coefficient range [-R, R]");
    oracle->add_option("--tol", tol, "relative residual tolerance");
    oracle->add_option("--trials", trials, "number of consecutive seeds to run");
    oracle->add_option("--format", oracle_fmt, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        CliLimits limits{max_n};
        OutputDocument doc;
        if (formula->parsed()) {
            doc = cmd_formula(n, parse_format(formula_fmt), limits);
        } else if (eval->parsed()) {
            doc = cmd_eval(n, d_str, g_str, parse_format(eval_fmt), limits);
        } else if (table->parsed()) {
            doc = cmd_table(n, parse_range(d_range), parse_range(g_range),
                            parse_format(table_fmt), limits);
        } else if (verify->parsed()) {
            doc = cmd_verify(verify_max_n, parse_format(verify_fmt), limits);
        } else if (oracle->parsed()) {
            doc = cmd_oracle(oracle_d, seed, oracle_range, tol, trials, parse_format(oracle_fmt));
        }
        std::cout << doc.body;
        return doc.exit_code;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
