#pragma once

#include <iosfwd>
#include <string>

#include "shrink/scenario.hpp"

namespace shrink {

/// Machine-readable report: flat `key = value` lines in a stable order,
/// floating-point values printed with 12 significant digits. The per-point
/// table is not part of this format (see write_plot_data).
std::string format_report(const Report& report);
Report parse_report_text(const std::string& text);
Report parse_report_file(const std::string& path);

/// Atomic write (temp file + rename).
void write_report_file(const Report& report, const std::string& path);

/// Delimited per-point table (r, theta, rho_hat, rho_f, margin, u, lap_u),
/// rows ordered by (ring, angle).
void write_plot_data(const Report& report, const std::string& path);

/// Human-readable summary.
void print_summary(const Report& report, std::ostream& os);

/// Exit status for a verdict: 0 PASS, 2 FAIL, 3 HYPOTHESIS_VIOLATED.
int exit_code_for(Verdict v);

}  // namespace shrink
