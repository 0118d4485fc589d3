#include "shrink/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace shrink {

namespace {

constexpr double kCenterTol = 1e-10;
constexpr double kCurvatureCompareTol = 1e-4;  // numeric-curvature headroom
constexpr double kBoundaryGapTol = 1e-6;
// Subharmonicity stencil and exclusion sizes, relative to the outer grid
// radius. The stencil must stay well clear of zeros of f: the truncation
// error of the five-point Laplacian on log-type singularities grows like
// (step/d)^2 / d^2 with d the distance to the zero.
constexpr double kSubharmonicStep = 1e-4;
constexpr double kZeroExclusion = 0.16;

double quiet_nan() { return std::numeric_limits<double>::quiet_NaN(); }

struct GridPoint {
    int ring, angle;
    double r, theta;
    Complex z;
};

template <typename F>
void for_each_grid_point(const Scenario& s, F&& fn) {
    const double r_max = s.grid_rmax();
    for (int k = 1; k <= s.grid.n_radial; ++k) {
        const double r = r_max * k / s.grid.n_radial;
        for (int j = 0; j < s.grid.n_angular; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / s.grid.n_angular;
            fn(GridPoint{k, j, r, theta, std::polar(r, theta)});
        }
    }
}

/// Shared margin runner: bound(z) - rho(f(z)) over the grid.
Report run_margins(const Scenario& s, Mode mode,
                   const std::function<double(const GridPoint&)>& bound,
                   std::vector<HypothesisCheck> hypotheses) {
    Report rep;
    rep.scenario_name = s.name;
    rep.mode = mode;
    rep.hypotheses = std::move(hypotheses);

    double sum = 0.0;
    double min_m = std::numeric_limits<double>::infinity();
    double max_m = -std::numeric_limits<double>::infinity();
    int n = 0;
    bool escaped = false;

    for_each_grid_point(s, [&](const GridPoint& p) {
        PointRecord rec;
        rec.ring = p.ring;
        rec.angle = p.angle;
        rec.r = p.r;
        rec.theta = p.theta;
        rec.rho_hat = s.domain.geodesic_radius(p.r);
        const Complex fz = s.map.eval(p.z);
        if (std::abs(fz) >= s.target.coordinate_radius()) {
            rec.in_chart = false;
            rec.rho_image = quiet_nan();
            rec.margin = quiet_nan();
            escaped = true;
        } else {
            rec.rho_image = s.target.distance_to_center(fz);
            rec.margin = bound(p) - rec.rho_image;
            min_m = std::min(min_m, rec.margin);
            max_m = std::max(max_m, rec.margin);
            sum += rec.margin;
            ++n;
        }
        rep.points.push_back(rec);
    });

    rep.n_points = static_cast<int>(rep.points.size());
    rep.min_margin = min_m;
    rep.max_margin = max_m;
    rep.mean_margin = n > 0 ? sum / n : 0.0;

    if (!rep.hypotheses_pass())
        rep.verdict = Verdict::hypothesis_violated;
    else if (escaped || rep.min_margin < -s.tol.ineq_slack)
        rep.verdict = Verdict::fail;
    else
        rep.verdict = Verdict::pass;
    return rep;
}

/// Finds the coordinate radius whose distance from the center is rho.
double target_radius_at_distance(const ConformalSurface& target, double theta,
                                 double rho) {
    if (target.radially_symmetric()) return target.radius_at_distance(rho);
    // Bisect the ray integral; it is monotone in |w|.
    double lo = 0.0, hi = target.coordinate_radius() * (1.0 - 1e-9);
    if (target.distance_to_center(std::polar(hi, theta)) < rho)
        throw std::domain_error("ray does not reach the requested distance");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (target.distance_to_center(std::polar(mid, theta)) < rho ? lo : hi) = mid;
        if (hi - lo < 1e-14 * (1.0 + hi)) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<HypothesisCheck> check_hypotheses(const Scenario& s, Mode mode) {
    std::vector<HypothesisCheck> out;

    {
        HypothesisCheck c{"radial_symmetry", true, 0.0, ""};
        for (int i = 0; i <= 32; ++i) {
            const double r = s.domain_radius_in_use * i / 32.0;
            const double lam = s.domain.factor(r);
            if (!(lam > 0.0)) {
                c.passed = false;
                c.magnitude = std::max(c.magnitude, -lam);
                c.detail = "non-positive conformal factor";
            }
        }
        out.push_back(c);
    }

    {
        const double f0 = std::abs(s.map.eval(0.0));
        out.push_back({"center_fixed", f0 <= kCenterTol, f0,
                       f0 <= kCenterTol ? "" : "f(0) != 0"});
    }

    if (mode == Mode::theorem1 || mode == Mode::example2) {
        const bool ok = s.rho2 <= s.rho1 + 1e-12;
        out.push_back({"radii_ordered", ok, ok ? 0.0 : s.rho2 - s.rho1,
                       ok ? "" : "rho2 > rho1"});
    } else if (mode == Mode::theorem2) {
        // rho2 > rho1 needs the metric to extend circularly symmetrically to
        // a disk of geodesic radius rho2.
        const bool ok = s.rho2 <= s.rho1 + 1e-12 ||
                        s.rho2 < s.domain.max_geodesic_radius();
        out.push_back({"extension_condition", ok,
                       ok ? 0.0 : s.rho2 - s.domain.max_geodesic_radius(),
                       ok ? "" : "metric does not extend to geodesic radius rho2"});
    } else if (mode == Mode::classical) {
        const bool ok = s.domain.kind() == RadialMetric::Kind::euclidean &&
                        s.target.kind() == ConformalSurface::Kind::euclidean;
        out.push_back({"euclidean_pair", ok, 0.0,
                       ok ? "" : "classical mode needs euclidean metrics"});
    }

    if (mode == Mode::example1) {
        // Target curvature must be <= 0 throughout the image disk.
        HypothesisCheck c{"target_nonpositive_curvature", true, 0.0, ""};
        const double w_hi = s.target.radially_symmetric()
                                ? std::min(0.9 * s.target.coordinate_radius(),
                                           target_radius_at_distance(s.target, 0.0,
                                                                     0.999 * s.rho2))
                                : 0.9 * s.target.coordinate_radius();
        for (int i = 1; i <= 24; ++i) {
            const double w = w_hi * i / 24.0;
            double k;
            try {
                k = s.target.gauss_curvature(Complex(w, 0.0));
            } catch (const std::domain_error&) {
                continue;
            }
            if (k > kCurvatureCompareTol) {
                c.passed = false;
                if (k > c.magnitude) {
                    c.magnitude = k;
                    std::ostringstream os;
                    os << "K = " << k << " at |w| = " << w;
                    c.detail = os.str();
                }
            }
        }
        out.push_back(c);
    } else if (mode == Mode::theorem1 || mode == Mode::theorem2 ||
               mode == Mode::example2) {
        // Curvature comparison K(rho, theta) <= K_hat(rho_hat) at rho = rho_hat.
        HypothesisCheck c{"curvature_comparison", true, 0.0, ""};
        double rho_hi = std::min(s.rho2, 0.95 * s.domain.max_geodesic_radius());
        if (s.target.radially_symmetric())
            rho_hi = std::min(rho_hi, 0.98 * s.target.max_distance());
        const int n_theta = s.target.radially_symmetric() ? 1 : 8;
        for (int i = 1; i <= 32; ++i) {
            const double rho = rho_hi * i / 32.0;
            double k_hat;
            try {
                k_hat = s.domain.curvature(rho);
            } catch (const std::domain_error&) {
                continue;
            }
            for (int jt = 0; jt < n_theta; ++jt) {
                const double theta = 2.0 * std::numbers::pi * jt / n_theta;
                double k;
                try {
                    const double w = target_radius_at_distance(s.target, theta, rho);
                    k = s.target.gauss_curvature(std::polar(w, theta));
                } catch (const std::domain_error&) {
                    continue;
                }
                if (k > k_hat + kCurvatureCompareTol) {
                    c.passed = false;
                    if (k - k_hat > c.magnitude) {
                        c.magnitude = k - k_hat;
                        std::ostringstream os;
                        os << "K = " << k << " > K_hat = " << k_hat
                           << " at rho = " << rho;
                        c.detail = os.str();
                    }
                }
            }
        }
        out.push_back(c);
    }

    return out;
}

Report verify_shrinking(const Scenario& s) {
    auto hyp = check_hypotheses(s, Mode::theorem1);
    return run_margins(
        s, Mode::theorem1,
        [&](const GridPoint& p) { return s.domain.geodesic_radius(p.r); },
        std::move(hyp));
}

Report verify_general_bound(const Scenario& s) {
    auto hyp = check_hypotheses(s, Mode::theorem2);
    Report rep;
    const bool extendable = s.rho2 < s.domain.max_geodesic_radius();
    if (!extendable) {
        rep.scenario_name = s.name;
        rep.mode = Mode::theorem2;
        rep.hypotheses = std::move(hyp);
        rep.verdict = Verdict::hypothesis_violated;
        rep.min_margin = quiet_nan();
        rep.max_margin = quiet_nan();
        rep.mean_margin = quiet_nan();
        return rep;
    }
    const double ratio =
        s.domain.euclidean_radius(s.rho2) / s.domain.euclidean_radius(s.rho1);
    rep = run_margins(
        s, Mode::theorem2,
        [&](const GridPoint& p) {
            return s.domain.geodesic_radius(ratio * p.r);
        },
        std::move(hyp));
    rep.set_scalar("bound_ratio", ratio);
    // Consequence of the maximum principle: H(rho(f(z)))/|z| <= ratio.
    double worst = 0.0;
    for (const PointRecord& p : rep.points) {
        if (!p.in_chart || p.rho_image >= s.domain.max_geodesic_radius()) continue;
        worst = std::max(worst,
                         s.domain.euclidean_radius(p.rho_image) / p.r);
    }
    rep.set_scalar("max_image_ratio", worst);
    return rep;
}

Report verify_example1(const Scenario& s) {
    auto hyp = check_hypotheses(s, Mode::example1);
    const double slope = s.rho2 / s.domain_radius_in_use;
    return run_margins(
        s, Mode::example1,
        [&](const GridPoint& p) { return slope * p.r; }, std::move(hyp));
}

Report verify_classical(const Scenario& s) {
    auto hyp = check_hypotheses(s, Mode::classical);
    const double r1 = s.domain_radius_in_use;
    const double r2 = s.rho2;  // euclidean target: geodesic radius == euclidean
    Report rep = run_margins(
        s, Mode::classical,
        [&](const GridPoint& p) { return (r2 / r1) * p.r; }, std::move(hyp));

    // Constancy demonstration: the same bound on a fixed subdisk, with the
    // domain radius scaled up. The bound (R2 / (s R1)) r shrinks like 1/s;
    // a map bounded on the larger disks is squeezed to a constant.
    const double r_fix = s.grid_rmax();
    for (double scale : {10.0, 100.0, 1000.0}) {
        double sup_f = 0.0;
        for (int j = 0; j < 256; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / 256;
            sup_f = std::max(
                sup_f, std::abs(s.map.eval(std::polar(0.98 * scale * r1, theta))));
        }
        std::ostringstream key;
        key << "liouville.bound." << static_cast<int>(scale);
        rep.set_scalar(key.str(), (r2 / (scale * r1)) * r_fix);
        std::ostringstream key2;
        key2 << "liouville.bounded_hypothesis." << static_cast<int>(scale);
        rep.set_scalar(key2.str(), sup_f <= r2 ? 1.0 : 0.0);
    }
    return rep;
}

CenterNormReport check_center_norm(const Scenario& s) {
    CenterNormReport out;
    out.norm = df_norm(s.map, s.domain, s.target, 0.0);
    out.ok = out.norm <= 1.0 + s.tol.ineq_slack;
    return out;
}

std::vector<BoundaryPointReport> check_boundary_stretch(
    const Scenario& s, std::span<const Complex> boundary_points) {
    std::vector<BoundaryPointReport> out;
    const bool euclidean_unit =
        s.domain.kind() == RadialMetric::Kind::euclidean &&
        s.target.kind() == ConformalSurface::Kind::euclidean &&
        std::fabs(s.domain_radius_in_use - 1.0) < 1e-12 &&
        std::fabs(s.rho2 - 1.0) < 1e-12;

    for (const Complex& b : boundary_points) {
        BoundaryPointReport r;
        r.b = b;
        const double rb = std::abs(b);
        const double rho_fb = s.target.distance_to_center(s.map.eval(b));
        r.boundary_gap = std::fabs(rho_fb - s.rho2);
        r.maps_to_boundary = r.boundary_gap <= kBoundaryGapTol * (1.0 + s.rho2);

        // One-sided radial difference quotient of rho(f(t b)) in rho_hat(t b).
        const double t = 1.0 - 1e-5;
        const double rho_hat_b = s.domain.geodesic_radius(rb);
        const double rho_hat_tb = s.domain.geodesic_radius(t * rb);
        const double rho_ftb = s.target.distance_to_center(s.map.eval(t * b));
        r.radial_quotient = (rho_fb - rho_ftb) / (rho_hat_b - rho_hat_tb);

        r.df_norm_at_b = df_norm(s.map, s.domain, s.target, b);
        r.deriv_abs = std::abs(s.map.deriv(b));
        if (euclidean_unit) {
            const double n0 = std::abs(s.map.deriv(0.0));
            r.sharp_bound = 1.0 + (1.0 - n0) / (1.0 + n0);
        }

        r.ok = r.maps_to_boundary &&
               r.radial_quotient >= 1.0 - 1e-6 &&
               r.df_norm_at_b >= 1.0 - 1e-6 &&
               (!euclidean_unit || r.deriv_abs >= r.sharp_bound - s.tol.ineq_slack);
        out.push_back(r);
    }
    return out;
}

SubharmonicReport check_subharmonicity(const Scenario& s) {
    SubharmonicReport out;
    const double r_max = s.grid_rmax();
    const double step = kSubharmonicStep * r_max;
    const double exclusion = kZeroExclusion * r_max;

    // Exclusion centers: zeros of f where u is singular. The zero at the
    // origin is harmless when f'(0) != 0 (u stays bounded there).
    std::vector<Complex> excluded;
    for (const ZeroOfMap& z0 : s.map.zeros(s.domain_radius_in_use)) {
        if (std::abs(z0.location) < 1e-12 && std::abs(s.map.deriv(0.0)) > 1e-9)
            continue;
        excluded.push_back(z0.location);
    }

    auto u_at = [&](Complex z) -> double {
        const double az = std::abs(z);
        const Complex fz = s.map.eval(z);
        if (std::abs(fz) >= s.target.coordinate_radius()) return quiet_nan();
        const double rho = s.target.distance_to_center(fz);
        if (rho >= s.domain.max_geodesic_radius()) return quiet_nan();
        if (rho == 0.0) return -std::numeric_limits<double>::infinity();
        return std::log(s.domain.euclidean_radius(rho) / az);
    };

    out.min_lap_u = std::numeric_limits<double>::infinity();
    out.interior_max_u = -std::numeric_limits<double>::infinity();
    out.boundary_max_u = -std::numeric_limits<double>::infinity();

    for_each_grid_point(s, [&](const GridPoint& p) {
        PointRecord rec;
        rec.ring = p.ring;
        rec.angle = p.angle;
        rec.r = p.r;
        rec.theta = p.theta;
        rec.rho_hat = s.domain.geodesic_radius(p.r);
        rec.u = u_at(p.z);

        bool retained = std::isfinite(rec.u);
        for (const Complex& c : excluded)
            if (std::abs(p.z - c) < exclusion) retained = false;

        if (std::isfinite(rec.u)) {
            if (p.ring == s.grid.n_radial)
                out.boundary_max_u = std::max(out.boundary_max_u, rec.u);
            else
                out.interior_max_u = std::max(out.interior_max_u, rec.u);
        }

        if (retained) {
            const double lap =
                (u_at(p.z + Complex(step, 0)) + u_at(p.z - Complex(step, 0)) +
                 u_at(p.z + Complex(0, step)) + u_at(p.z - Complex(0, step)) -
                 4.0 * rec.u) /
                (step * step);
            if (std::isfinite(lap)) {
                rec.lap_u = lap;
                out.min_lap_u = std::min(out.min_lap_u, lap);
                ++out.retained;
            }
        }
        out.points.push_back(rec);
    });

    if (out.retained == 0)
        throw std::runtime_error(
            "check_subharmonicity: all grid points excluded");

    out.laplacian_ok = out.min_lap_u >= -s.tol.subharmonic_slack;
    out.max_principle_ok = out.interior_max_u <= out.boundary_max_u + 1e-6;
    out.ok = out.laplacian_ok && out.max_principle_ok;
    return out;
}

AhlforsReport ahlfors_limit(const Scenario& s) {
    AhlforsReport out;
    if (s.r0_sequence.empty())
        throw std::invalid_argument("ahlfors_limit: empty r0 sequence");
    const double az2 = std::abs(s.z2);
    for (double r0 : s.r0_sequence) {
        if (!(az2 < r0 && r0 < 1.0))
            throw std::invalid_argument("ahlfors_limit: need |z2| < r0 < 1");
    }

    const RadialMetric hyperbolic = RadialMetric::poincare();
    out.limit_value = hyperbolic.geodesic_radius(az2);

    for (double r0 : s.r0_sequence) {
        AhlforsStage st;
        st.r0 = r0;

        // Max image distance over the circle |z| = r0, with a safety factor;
        // the maximum principle puts the true maximum on the boundary circle.
        double rho_max = 0.0;
        for (int j = 0; j < 512; ++j) {
            const Complex z = std::polar(r0, 2.0 * std::numbers::pi * j / 512);
            rho_max = std::max(rho_max,
                               s.target.distance_to_center(s.map.eval(z)));
        }
        st.rho0 = 1.01 * rho_max;

        // Smallest grid value t_j = 1 - 2^-j with rho_tilde(t_j) >= rho0.
        double t = 0.0;
        bool found = false;
        for (int j = 1; j <= 50; ++j) {
            t = 1.0 - std::ldexp(1.0, -j);
            if (t <= az2 / r0) continue;
            if (hyperbolic.geodesic_radius(t) >= st.rho0) {
                found = true;
                break;
            }
        }
        if (!found)
            throw std::runtime_error(
                "ahlfors_limit: no admissible r1 at this resolution");
        st.r1_over_r0 = t;
        st.rho1 = hyperbolic.geodesic_radius(t);

        Scenario stage;
        stage.name = s.name + "-stage";
        stage.domain = hyperbolic;
        stage.target = s.target;
        stage.map = HoloMap::compose({HoloMap::rotation_scale(r0), s.map});
        stage.domain_radius_in_use = t;
        stage.rho2 = st.rho0;
        stage.grid = {32, 64};
        stage.tol.ineq_slack = 1e-6;
        stage.finalize();

        Report rep = verify_shrinking(stage);
        st.min_margin = rep.min_margin;
        st.stage_verdict = rep.verdict;
        st.bound = hyperbolic.geodesic_radius(az2 / r0);
        out.stages.push_back(st);
    }

    for (size_t i = 1; i < out.stages.size(); ++i) {
        if (out.stages[i].bound > out.stages[i - 1].bound + 1e-6)
            out.monotone = false;
    }
    const AhlforsStage& last = out.stages.back();
    // The bound converges at the rate of h(|z2|/r0) - h(|z2|); a factor-two
    // headroom on the first-order estimate.
    const double conv_tol = 2.0 * az2 * hyperbolic.factor(az2) *
                            (1.0 - last.r0) / last.r0;
    out.converged = std::fabs(last.bound - out.limit_value) <= conv_tol;
    bool stages_ok = true;
    for (const AhlforsStage& st : out.stages)
        if (st.stage_verdict != Verdict::pass) stages_ok = false;
    out.ok = out.monotone && out.converged && stages_ok;
    return out;
}

LaplacianComparisonReport check_laplacian_comparison(
    const RadialMetric& domain,
    const std::function<double(double)>& target_curvature, double rho_lo,
    double rho_hi, int samples, double tol) {
    if (!(0.0 < rho_lo && rho_lo < rho_hi))
        throw std::invalid_argument("check_laplacian_comparison: bad range");
    JacobiSolution g = jacobi_solve(target_curvature, rho_hi);

    LaplacianComparisonReport out;
    out.min_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        const double c = rho_lo + (rho_hi - rho_lo) * i / (samples - 1.0);
        if (g.first_zero && c >= *g.first_zero) break;
        const double d = std::max(1e-5, 1e-4 * c);
        if (c + d >= domain.max_geodesic_radius()) break;
        auto gf = [&domain](double x) { return domain.circle_factor(x); };
        const double domain_log_deriv =
            num::central_first(gf, c, d) / domain.circle_factor(c);
        const double margin = g.log_derivative(c) - domain_log_deriv;
        out.rho.push_back(c);
        out.margin.push_back(margin);
        out.min_margin = std::min(out.min_margin, margin);
    }
    out.ok = out.min_margin >= -tol;
    return out;
}

}  // namespace shrink
