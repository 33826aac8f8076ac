#include <fstream>
#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "polyloc/cli.hpp"

namespace {

struct Flags {
    int n = 0;
    int m = 0;
    double r = 0.0;
    int k = 0;
    int trials = 0;
    double tol = 0.0;
    std::string format = "json-report";
};

struct Leaf {
    CLI::App* app;
    std::string command;
    std::vector<std::pair<CLI::Option*, char>> opts;
};

Leaf make_leaf(CLI::App* app, std::string command, Flags& f, polyloc::cli::RunConfig& cfg) {
    Leaf leaf{app, std::move(command), {}};
    leaf.opts.emplace_back(app->add_option("--n,--size", f.n, "matrix size (or parameter n)"), 'n');
    leaf.opts.emplace_back(app->add_option("--m", f.m, "polynomial degree"), 'm');
    leaf.opts.emplace_back(app->add_option("--r", f.r, "spectral-radius bound or witness parameter"), 'r');
    leaf.opts.emplace_back(app->add_option("--k", f.k, "Birkhoff terms per coefficient (default n^2)"), 'k');
    leaf.opts.emplace_back(app->add_option("--trials", f.trials, "number of random instances"), 't');
    leaf.opts.emplace_back(app->add_option("--tol", f.tol, "tolerance override"), 'e');
    app->add_option("--seed", cfg.seed, "base seed; trial i uses seed + i");
    app->add_option("--input", cfg.input, "polynomial document");
    app->add_option("--output", cfg.output, "write the report here instead of stdout");
    app->add_option("--format", f.format, "json-report | csv-moduli | poly")
        ->check(CLI::IsMember({"json-report", "csv-moduli", "poly"}));
    app->add_flag("--timing", cfg.timing, "include runtime in the summary");
    return leaf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eigenvalues and eigenvalue-location checks for matrix polynomials"};
    app.require_subcommand(1);

    polyloc::cli::RunConfig cfg;
    Flags flags;
    std::vector<Leaf> leaves;

    leaves.push_back(make_leaf(app.add_subcommand("eig", "eigenvalues of a polynomial document"), "eig",
                               flags, cfg));
    auto* bounds = app.add_subcommand("bounds", "analytic root bounds")->require_subcommand(1);
    leaves.push_back(make_leaf(bounds->add_subcommand("cauchy", "Cauchy bound"), "bounds cauchy", flags, cfg));

    auto* verify = app.add_subcommand("verify", "check eigenvalue-location theorems")->require_subcommand(1);
    leaves.push_back(make_leaf(verify->add_subcommand("ds", "annulus for the doubly stochastic family"),
                               "verify ds", flags, cfg));
    leaves.push_back(make_leaf(verify->add_subcommand("schur", "disc for commuting coefficients"),
                               "verify schur", flags, cfg));
    leaves.push_back(make_leaf(verify->add_subcommand("unit-circle", "roots of unity as eigenvalues"),
                               "verify unit-circle", flags, cfg));

    auto* extremal = app.add_subcommand("extremal", "witness polynomials for bound optimality")
                         ->require_subcommand(1);
    leaves.push_back(make_leaf(extremal->add_subcommand("inf", "inner-radius witness"), "extremal inf", flags, cfg));
    leaves.push_back(make_leaf(extremal->add_subcommand("sup", "outer-radius witness"), "extremal sup", flags, cfg));
    leaves.push_back(make_leaf(extremal->add_subcommand("schur-sup", "disc-radius witness"),
                               "extremal schur-sup", flags, cfg));

    leaves.push_back(make_leaf(app.add_subcommand("counterexample", "non-commuting unbounded family"),
                               "counterexample", flags, cfg));
    auto* example = app.add_subcommand("example", "worked examples")->require_subcommand(1);
    leaves.push_back(make_leaf(example->add_subcommand("mass-spring", "damped mass-spring system"),
                               "example mass-spring", flags, cfg));

    auto* sweep = app.add_subcommand("sweep", "inf/sup campaigns")->require_subcommand(1);
    leaves.push_back(make_leaf(sweep->add_subcommand("ds", "doubly stochastic family"), "sweep ds", flags, cfg));
    leaves.push_back(make_leaf(sweep->add_subcommand("schur", "commuting S_r family"), "sweep schur", flags, cfg));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return polyloc::cli::kUsage;
    }

    for (const auto& leaf : leaves) {
        if (!leaf.app->parsed()) {
            continue;
        }
        cfg.command = leaf.command;
        for (const auto& [opt, key] : leaf.opts) {
            if (opt->count() == 0) {
                continue;
            }
            switch (key) {
                case 'n': cfg.n = flags.n; break;
                case 'm': cfg.m = flags.m; break;
                case 'r': cfg.r = flags.r; break;
                case 'k': cfg.k = flags.k; break;
                case 't': cfg.trials = flags.trials; break;
                case 'e': cfg.tol = flags.tol; break;
                default: break;
            }
        }
    }
    cfg.format = *polyloc::cli::parse_format(flags.format);

    const polyloc::cli::RunResult result = polyloc::cli::run(cfg);
    if (!result.message.empty()) {
        std::cerr << "polyloc: " << result.message << '\n';
    }
    if (!result.document.empty()) {
        if (cfg.output.empty()) {
            std::cout << result.document;
        } else {
            std::ofstream out(cfg.output, std::ios::binary);
            if (!out) {
                std::cerr << "polyloc: cannot write " << cfg.output << '\n';
                return polyloc::cli::kUsage;
            }
            out << result.document;
        }
    }
    return result.status;
}
