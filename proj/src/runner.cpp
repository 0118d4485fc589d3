#include "shrink/runner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "shrink/report_io.hpp"
#include "shrink/verify.hpp"

namespace shrink {

namespace {

void merge_subharmonic(Report& rep, const Scenario& s) {
    SubharmonicReport sub = check_subharmonicity(s);
    if (sub.points.size() == rep.points.size()) {
        for (size_t i = 0; i < sub.points.size(); ++i) {
            rep.points[i].u = sub.points[i].u;
            rep.points[i].lap_u = sub.points[i].lap_u;
        }
    }
    rep.set_scalar("subharmonic.retained", sub.retained);
    rep.set_scalar("subharmonic.min_lap_u", sub.min_lap_u);
    rep.set_scalar("subharmonic.interior_max_u", sub.interior_max_u);
    rep.set_scalar("subharmonic.boundary_max_u", sub.boundary_max_u);
    rep.set_scalar("subharmonic.ok", sub.ok ? 1.0 : 0.0);
    if (!sub.ok && rep.verdict == Verdict::pass) rep.verdict = Verdict::fail;
}

void add_center_norm(Report& rep, const Scenario& s) {
    CenterNormReport c = check_center_norm(s);
    rep.set_scalar("center_norm", c.norm);
    if (!c.ok && rep.verdict == Verdict::pass) rep.verdict = Verdict::fail;
}

std::function<double(double)> domain_curvature_fn(const RadialMetric& m) {
    switch (m.kind()) {
        case RadialMetric::Kind::euclidean:
            return [](double) { return 0.0; };
        case RadialMetric::Kind::poincare:
            return [](double) { return -1.0; };
        case RadialMetric::Kind::spherical:
            return [](double) { return 1.0; };
        case RadialMetric::Kind::custom:
            return [m](double rho) { return m.curvature(rho); };
    }
    throw std::logic_error("unreachable");
}

std::function<double(double)> target_curvature_fn(const ConformalSurface& t) {
    switch (t.kind()) {
        case ConformalSurface::Kind::euclidean:
            return [](double) { return 0.0; };
        case ConformalSurface::Kind::poincare:
            return [](double) { return -1.0; };
        case ConformalSurface::Kind::spherical:
            return [](double) { return 1.0; };
        case ConformalSurface::Kind::curvature_scaled: {
            // mu(0) = 2/a, so the constant curvature -a^2 is recoverable.
            const double a = 2.0 / t.factor(0.0);
            return [a](double) { return -a * a; };
        }
        case ConformalSurface::Kind::custom_radial: {
            if (!t.radially_symmetric())
                throw std::invalid_argument(
                    "comparison mode needs a radially symmetric target");
            return [t](double rho) {
                if (rho == 0.0) rho = 1e-6;
                return t.gauss_curvature(t.radius_at_distance(rho));
            };
        }
    }
    throw std::logic_error("unreachable");
}

Report run_comparison(const Scenario& s) {
    Report rep;
    rep.scenario_name = s.name;
    rep.mode = Mode::comparison;

    auto k_hat = domain_curvature_fn(s.domain);
    auto k = target_curvature_fn(s.target);
    double rho_hi = std::min(s.rho1, s.rho2);
    rho_hi = std::min(rho_hi, 0.95 * s.domain.max_geodesic_radius());
    if (s.target.radially_symmetric())
        rho_hi = std::min(rho_hi, 0.95 * s.target.max_distance());
    const double rho_lo = rho_hi / 256.0;
    ComparisonMargins cm = comparison_check(k, k_hat, rho_lo, rho_hi, 256, 1e-9);

    rep.hypotheses.push_back({"curvature_comparison", cm.hypothesis_ok,
                              cm.worst_hypothesis_gap,
                              cm.hypothesis_ok ? "" : "K > K_hat somewhere"});
    rep.set_scalar("comparison.rho_lo", rho_lo);
    rep.set_scalar("comparison.rho_hi", rho_hi);
    rep.set_scalar("comparison.n_samples", static_cast<double>(cm.rho.size()));
    rep.set_scalar("comparison.min_margin", cm.min_margin);
    if (!cm.log_deriv.empty()) {
        rep.set_scalar("comparison.min_log_deriv_margin",
                       *std::min_element(cm.log_deriv.begin(), cm.log_deriv.end()));
        rep.set_scalar("comparison.min_factor_margin",
                       *std::min_element(cm.factor.begin(), cm.factor.end()));
        rep.set_scalar("comparison.min_length_margin",
                       *std::min_element(cm.length.begin(), cm.length.end()));
    }
    if (!cm.hypothesis_ok)
        rep.verdict = Verdict::hypothesis_violated;
    else
        rep.verdict = cm.pass ? Verdict::pass : Verdict::fail;
    return rep;
}

Report run_ahlfors(const Scenario& s) {
    Report rep;
    rep.scenario_name = s.name;
    rep.mode = Mode::ahlfors_limit;
    // Only the base checks apply up front; each stage re-checks the rest.
    rep.hypotheses = check_hypotheses(s, Mode::ahlfors_limit);

    AhlforsReport ar = ahlfors_limit(s);
    rep.set_scalar("ahlfors.limit", ar.limit_value);
    for (size_t i = 0; i < ar.stages.size(); ++i) {
        const AhlforsStage& st = ar.stages[i];
        const std::string p = "ahlfors.stage" + std::to_string(i) + ".";
        rep.set_scalar(p + "r0", st.r0);
        rep.set_scalar(p + "rho0", st.rho0);
        rep.set_scalar(p + "r1_over_r0", st.r1_over_r0);
        rep.set_scalar(p + "bound", st.bound);
        rep.set_scalar(p + "min_margin", st.min_margin);
        rep.set_scalar(p + "stage_pass",
                       st.stage_verdict == Verdict::pass ? 1.0 : 0.0);
    }
    rep.set_scalar("ahlfors.monotone", ar.monotone ? 1.0 : 0.0);
    rep.set_scalar("ahlfors.converged", ar.converged ? 1.0 : 0.0);

    if (!rep.hypotheses_pass())
        rep.verdict = Verdict::hypothesis_violated;
    else
        rep.verdict = ar.ok ? Verdict::pass : Verdict::fail;
    return rep;
}

}  // namespace

Report run_scenario(const ParsedScenario& parsed) {
    const Scenario& s = parsed.scenario;
    switch (parsed.mode) {
        case Mode::theorem1: {
            Report rep = verify_shrinking(s);
            add_center_norm(rep, s);
            if (rep.hypotheses_pass()) merge_subharmonic(rep, s);
            return rep;
        }
        case Mode::example2: {
            Report rep = verify_shrinking(s);
            rep.mode = Mode::example2;
            add_center_norm(rep, s);
            if (rep.hypotheses_pass()) merge_subharmonic(rep, s);
            return rep;
        }
        case Mode::theorem2:
            return verify_general_bound(s);
        case Mode::example1: {
            Report rep = verify_example1(s);
            add_center_norm(rep, s);
            return rep;
        }
        case Mode::classical: {
            Report rep = verify_classical(s);
            add_center_norm(rep, s);
            if (rep.hypotheses_pass()) merge_subharmonic(rep, s);
            return rep;
        }
        case Mode::ahlfors_limit:
            return run_ahlfors(s);
        case Mode::comparison:
            return run_comparison(s);
    }
    throw std::logic_error("unreachable");
}

int run_and_emit(ParsedScenario parsed, const RunOptions& opts, std::ostream& os) {
    if (opts.n_radial) parsed.scenario.grid.n_radial = *opts.n_radial;
    if (opts.n_angular) parsed.scenario.grid.n_angular = *opts.n_angular;
    if (opts.tol_ineq) parsed.scenario.tol.ineq_slack = *opts.tol_ineq;
    if (opts.tol_subharmonic)
        parsed.scenario.tol.subharmonic_slack = *opts.tol_subharmonic;
    if (parsed.scenario.grid.n_radial < 1 || parsed.scenario.grid.n_angular < 4)
        throw std::invalid_argument("grid must be at least 1 x 4");

    Report rep = run_scenario(parsed);
    if (opts.report_path) write_report_file(rep, *opts.report_path);
    if (opts.plot_path) write_plot_data(rep, *opts.plot_path);
    if (!opts.quiet) print_summary(rep, os);
    return exit_code_for(rep.verdict);
}

}  // namespace shrink
