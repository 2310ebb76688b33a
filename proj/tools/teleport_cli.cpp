// Command-line front end: runs one scenario and prints its report.

#include "teleport/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

int main(int argc, char** argv) {
    using namespace teleport;

    CLI::App app{"Teleportation of a photon polarization state, with and without symmetrization"};
    app.set_help_flag("-h,--help", "Show usage");

    RunConfig config;
    std::string scenario;
    app.add_option("scenario", scenario, "bennett | naive | symmetric | verify-bases | sweep")->required();
    app.add_option("--backend", config.backend, "exact or numeric (sweep: numeric)")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Backend>{{"exact", Backend::exact}, {"numeric", Backend::numeric}}));
    app.add_option("--seed", config.seed, "Seed for random inputs")->capture_default_str();
    auto* samples = app.add_option("--samples", config.samples, "Sweep sample count")->capture_default_str();
    app.add_option("--format", config.format, "text or json")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"text", OutputFormat::text}, {"json", OutputFormat::json}}));
    app.add_option("--output", config.output_path, "Write the report here instead of stdout");
    auto* backend_opt = app.get_option("--backend");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto parsed = parse_scenario(scenario);
    if (!parsed) {
        std::cerr << "usage error: unknown scenario '" << scenario << "'\n";
        return 2;
    }
    config.scenario = *parsed;
    if (config.scenario == Scenario::sweep && backend_opt->count() == 0) config.backend = Backend::numeric;
    if (config.scenario != Scenario::sweep && samples->count() > 0) {
        std::cerr << "usage error: --samples only applies to sweep\n";
        return 2;
    }

    if (config.output_path.empty()) return run(config, std::cout, std::cerr);
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
        std::cerr << "usage error: cannot open " << config.output_path << " for writing\n";
        return 2;
    }
    return run(config, file, std::cerr);
}
