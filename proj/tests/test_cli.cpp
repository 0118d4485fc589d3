#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "shrink/presets.hpp"
#include "shrink/report_io.hpp"
#include "shrink/runner.hpp"
#include "shrink/scenario_file.hpp"

using namespace shrink;

namespace {

const char* kValidDoc = R"(# squaring map on a hyperbolic subdisk
[domain]
kind = poincare
radius = 0.9

[target]
kind = poincare
radius = 2.9444  # just inside the geodesic radius of the domain disk

[map]
variant = power
n = 2

[mode]
mode = theorem1

[grid]
n_radial = 8
n_angular = 16

[tolerances]
ineq = 1e-6
)";

int parse_error_line(const std::string& text) {
    try {
        parse_scenario_text(text);
    } catch (const ScenarioParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("a complete scenario document parses into the right setup") {
    ParsedScenario p = parse_scenario_text(kValidDoc, "doc");
    CHECK(p.mode == Mode::theorem1);
    CHECK(p.scenario.domain.kind() == RadialMetric::Kind::poincare);
    CHECK(p.scenario.target.kind() == ConformalSurface::Kind::poincare);
    CHECK(p.scenario.domain_radius_in_use == doctest::Approx(0.9));
    CHECK(p.scenario.rho2 == doctest::Approx(2.9444));
    CHECK(p.scenario.rho1 == doctest::Approx(2.9444389791664403).epsilon(1e-9));
    CHECK(p.scenario.grid.n_radial == 8);
    CHECK(p.scenario.grid.n_angular == 16);
    CHECK(p.scenario.tol.ineq_slack == doctest::Approx(1e-6));
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error_line("[domain]\nkind = poincare\nradius = 0.9\n"
                           "[nonsense]\nx = 1\n") == 4);
    CHECK(parse_error_line("[domain]\nkind = poincare\nradius = 0.9\n"
                           "wobble = 2\n[target]\nkind = poincare\nradius = 1\n"
                           "[map]\nvariant = identity\n[mode]\nmode = theorem1\n") == 4);
    CHECK(parse_error_line("[domain]\nkind = poincare\nradius = 0.9\n"
                           "radius = 0.8\n") == 4);
    CHECK(parse_error_line("[domain]\nkind = poincare\nradius = banana\n") == 3);
    CHECK(parse_error_line("stray = 1\n") == 1);
    CHECK(parse_error_line("[domain\n") == 1);
    // Missing sections are reported without a line.
    CHECK(parse_error_line("[domain]\nkind = poincare\nradius = 0.9\n") == 0);
}

TEST_CASE("rescaling-mode keys parse and other modes reject them") {
    const char* doc =
        "[domain]\nkind = poincare\nradius = 0.999\n"
        "[target]\nkind = poincare\nradius = 5\n"
        "[map]\nvariant = power\nn = 2\n"
        "[mode]\nmode = ahlfors_limit\nz2_re = 0.4\nr0 = 0.9, 0.99\n";
    ParsedScenario p = parse_scenario_text(doc);
    CHECK(p.mode == Mode::ahlfors_limit);
    CHECK(p.scenario.z2 == Complex(0.4, 0.0));
    REQUIRE(p.scenario.r0_sequence.size() == 2);
    CHECK(p.scenario.r0_sequence[1] == doctest::Approx(0.99));

    const char* bad =
        "[domain]\nkind = poincare\nradius = 0.9\n"
        "[target]\nkind = poincare\nradius = 1\n"
        "[map]\nvariant = identity\n"
        "[mode]\nmode = theorem1\nr0 = 0.9\n";
    CHECK_THROWS_AS(parse_scenario_text(bad), ScenarioParseError);
}

TEST_CASE("scenario files load from disk") {
    const std::string path = "cli_test_scenario.ini";
    {
        std::ofstream out(path);
        out << kValidDoc;
    }
    ParsedScenario p = parse_scenario_file(path);
    CHECK(p.scenario.name == path);
    Report rep = run_scenario(p);
    CHECK(rep.verdict == Verdict::pass);
    std::remove(path.c_str());
}

TEST_CASE("report text round-trips byte for byte") {
    ParsedScenario p = make_preset("mgfsl-theorem2");
    p.scenario.grid = {8, 16};
    Report rep = run_scenario(p);
    const std::string text = format_report(rep);
    Report parsed = parse_report_text(text);
    CHECK(format_report(parsed) == text);
    CHECK(parsed.verdict == rep.verdict);
    CHECK(parsed.n_points == rep.n_points);
    CHECK(parsed.hypotheses.size() == rep.hypotheses.size());
    CHECK(parsed.scalars.size() == rep.scalars.size());
}

TEST_CASE("reports are deterministic across runs") {
    for (const char* name : {"pick-equality", "stereographic"}) {
        ParsedScenario p1 = make_preset(name);
        ParsedScenario p2 = make_preset(name);
        p1.scenario.grid = {8, 16};
        p2.scenario.grid = {8, 16};
        CHECK(format_report(run_scenario(p1)) == format_report(run_scenario(p2)));
    }
}

TEST_CASE("report and plot files land on disk atomically") {
    ParsedScenario p = make_preset("mgfsl-theorem2");
    RunOptions opts;
    opts.quiet = true;
    opts.n_radial = 8;
    opts.n_angular = 16;
    opts.report_path = "cli_test_report.txt";
    opts.plot_path = "cli_test_plot.csv";
    std::ostringstream sink;
    CHECK(run_and_emit(p, opts, sink) == 0);

    Report back = parse_report_file("cli_test_report.txt");
    CHECK(back.verdict == Verdict::pass);

    std::ifstream plot("cli_test_plot.csv");
    REQUIRE(plot.good());
    std::string header;
    std::getline(plot, header);
    CHECK(header == "r,theta,rho_hat,rho_f,margin,u,lap_u");
    int rows = 0;
    std::string line;
    while (std::getline(plot, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 8 * 16);
    std::remove("cli_test_report.txt");
    std::remove("cli_test_plot.csv");
}

TEST_CASE("exit codes follow the verdict contract") {
    CHECK(exit_code_for(Verdict::pass) == 0);
    CHECK(exit_code_for(Verdict::fail) == 2);
    CHECK(exit_code_for(Verdict::hypothesis_violated) == 3);

    std::ostringstream sink;
    RunOptions opts;
    opts.quiet = true;
    opts.n_radial = 8;
    opts.n_angular = 16;
    CHECK(run_and_emit(make_preset("schwarz-classical"), opts, sink) == 0);
    CHECK(run_and_emit(make_preset("stereographic"), opts, sink) == 3);

    // A genuinely expanding map fails the inequality without violating any
    // hypothesis: f(z) = 2z against matched euclidean radii.
    const char* doc =
        "[domain]\nkind = euclidean\nradius = 1\n"
        "[target]\nkind = euclidean\nradius = 1\n"
        "[map]\nvariant = rotation_scale\nmodulus = 2\n"
        "[mode]\nmode = theorem1\n";
    CHECK(run_and_emit(parse_scenario_text(doc), opts, sink) == 2);
}

TEST_CASE("preset catalog is complete and buildable") {
    const auto& catalog = preset_catalog();
    CHECK(catalog.size() >= 9);
    for (const Preset& p : catalog) {
        CHECK_FALSE(p.description.empty());
        ParsedScenario ps = make_preset(p.name);
        CHECK(ps.scenario.name == p.name);
        CHECK(ps.scenario.rho1 > 0.0);
    }
    CHECK_THROWS_AS(make_preset("no-such-preset"), std::invalid_argument);
}

TEST_CASE("summary printing names the scenario and verdict") {
    ParsedScenario p = make_preset("mgfsl-theorem2");
    p.scenario.grid = {8, 16};
    Report rep = run_scenario(p);
    std::ostringstream os;
    print_summary(rep, os);
    const std::string text = os.str();
    CHECK(text.find("mgfsl-theorem2") != std::string::npos);
    CHECK(text.find("PASS") != std::string::npos);
}
