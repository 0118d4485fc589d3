#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "shrink/presets.hpp"
#include "shrink/runner.hpp"
#include "shrink/scenario_file.hpp"

int main(int argc, char** argv) {
    CLI::App app{"numerical checks for conformal shrinking bounds"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string preset_name;
    shrink::RunOptions opts;
    std::string report_path, plot_path, grid_spec;
    double tol_ineq = 0.0, tol_sub = 0.0;

    CLI::App* run = app.add_subcommand("run", "run one scenario");
    run->add_option("file", scenario_path, "scenario file");
    run->add_option("--preset", preset_name, "built-in scenario name");
    run->add_option("--out", report_path, "write the report here");
    run->add_option("--plot", plot_path, "write per-point data here");
    run->add_option("--grid", grid_spec, "override the grid, e.g. 32x64");
    run->add_option("--tol-ineq", tol_ineq, "inequality slack override");
    run->add_option("--tol-subharmonic", tol_sub, "subharmonic slack override");
    run->add_flag("--quiet", opts.quiet, "suppress the summary");

    CLI::App* list = app.add_subcommand("list-presets", "list built-in scenarios");

    CLI11_PARSE(app, argc, argv);

    if (list->parsed()) {
        for (const shrink::Preset& p : shrink::preset_catalog())
            std::cout << p.name << "  " << p.description << "\n";
        return 0;
    }

    try {
        if (scenario_path.empty() == preset_name.empty()) {
            std::cerr << "run: give exactly one of a scenario file or --preset\n";
            return 1;
        }
        if (!report_path.empty()) opts.report_path = report_path;
        if (!plot_path.empty()) opts.plot_path = plot_path;
        if (!grid_spec.empty()) {
            const auto x = grid_spec.find('x');
            if (x == std::string::npos) throw std::invalid_argument("--grid: want NxM");
            opts.n_radial = std::stoi(grid_spec.substr(0, x));
            opts.n_angular = std::stoi(grid_spec.substr(x + 1));
        }
        if (tol_ineq > 0.0) opts.tol_ineq = tol_ineq;
        if (tol_sub > 0.0) opts.tol_subharmonic = tol_sub;

        shrink::ParsedScenario parsed =
            preset_name.empty() ? shrink::parse_scenario_file(scenario_path)
                                : shrink::make_preset(preset_name);
        return shrink::run_and_emit(std::move(parsed), opts, std::cout);
    } catch (const shrink::ScenarioParseError& e) {
        std::cerr << "scenario error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
