#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "shrink/scenario_file.hpp"

namespace shrink {

struct RunOptions {
    std::optional<std::string> report_path;
    std::optional<std::string> plot_path;
    std::optional<int> n_radial;
    std::optional<int> n_angular;
    std::optional<double> tol_ineq;
    std::optional<double> tol_subharmonic;
    bool quiet = false;
};

/// Runs one scenario end to end and assembles the report.
Report run_scenario(const ParsedScenario& parsed);

/// Applies option overrides, runs, writes any requested files, prints the
/// summary, and returns the process exit code (0 / 2 / 3).
int run_and_emit(ParsedScenario parsed, const RunOptions& opts, std::ostream& os);

}  // namespace shrink
