#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
    using namespace fpl;
    CLI::App app{"Hermite spectral solver for the homogeneous Fokker-Planck-Landau equation"};
    app.require_subcommand(1);

    double gamma = 0.0;
    double lambda = 1.0;
    int m0 = 5;
    std::string out;
    auto* pre = app.add_subcommand("precompute", "build and cache the collision tensor");
    pre->add_option("--gamma", gamma, "kernel exponent, > -5")->required();
    pre->add_option("--lambda", lambda, "kernel strength, > 0");
    pre->add_option("--m0", m0, "quadratic truncation degree, >= 2")->required();
    pre->add_option("--out", out, "cache file")->required();

    std::string config;
    auto* solve = app.add_subcommand("solve", "run a scenario from a JSON config");
    solve->add_option("--config", config, "config file")->required();

    std::string level = "fast";
    bool fault = false;
    auto* validate = app.add_subcommand("validate", "run the oracle and invariant checks");
    validate->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    validate->add_flag("--inject-fault", fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::kOk : cli::kUsage;
    }

    if (*pre) return cli::cmd_precompute(gamma, lambda, m0, out, std::cout, std::cerr);
    if (*solve) return cli::cmd_solve(config, std::cout, std::cerr);
    return cli::cmd_validate({parse_validation_level(level), fault}, std::cout, std::cerr);
}
