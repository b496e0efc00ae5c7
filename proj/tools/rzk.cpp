// rzk: cohomology rings of real moment-angle complexes from the command line.
//
//   rzk <command> <complex-file> [--route hochster|oracle] [--format json|table]
//       [--workers N] [--max-cells N] [--max-vertices N] [--seed N] [--check] [--dump]

#include "rzk/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>

int main(int argc, char** argv)
{
    rzk::cli::RunConfig cfg;
    try {
        rzk::cli::apply_environment(cfg, [](const char* name) { return std::getenv(name); });
    } catch (const rzk::InvalidInput& e) {
        std::cerr << nlohmann::json{{"error", "invalid-input"}, {"message", e.what()}}.dump() << '\n';
        return rzk::cli::input_error;
    }

    CLI::App app{"Integer cohomology rings of real moment-angle complexes"};
    app.require_subcommand(1, 1);
    app.allow_extras(false);

    const std::map<std::string, std::string> help{
        {"validate", "check a complex file and report closure and ghost vertices"},
        {"betti", "Betti numbers and torsion per degree"},
        {"cohomology", "groups per degree with representative cocycles"},
        {"hochster", "the full table of nonzero reduced cohomology of full subcomplexes"},
        {"ring", "generators and the cup product table"},
        {"oracle", "cohomology of the cellular cochain complex"},
        {"compare", "build the ring by both routes and compare them"},
    };
    std::map<std::string, rzk::Route> routes{{"hochster", rzk::Route::hochster}, {"oracle", rzk::Route::oracle}};
    for (const auto& name : rzk::cli::commands()) {
        CLI::App* sub = app.add_subcommand(name, help.at(name));
        sub->add_option("input", cfg.input, "complex file (JSON or plain text)")->required();
        sub->add_option("--route", cfg.route, "ring route")->transform(CLI::CheckedTransformer(routes, CLI::ignore_case));
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--max-cells", cfg.limits.max_cells, "cell cap for the cellular route")->check(CLI::PositiveNumber);
        sub->add_option("--max-vertices", cfg.limits.max_vertices, "vertex cap")->check(CLI::Range(1, 30));
        sub->add_option("--seed", cfg.seed, "seed for randomized checks");
        sub->add_flag("--check", cfg.check, "also compare both routes");
        sub->add_flag("--dump", cfg.dump, "oracle: include the cochain complex matrices");
        sub->callback([&cfg, name] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << nlohmann::json{{"error", "invalid-input"}, {"message", e.what()}}.dump() << '\n';
        return rzk::cli::input_error;
    }
    return rzk::cli::run(cfg, std::cout, std::cerr);
}
