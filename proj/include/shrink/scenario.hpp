#pragma once

#include <complex>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "shrink/holomap.hpp"
#include "shrink/radial_metric.hpp"
#include "shrink/target_surface.hpp"

namespace shrink {

enum class Mode {
    theorem1,
    theorem2,
    classical,
    example1,
    example2,
    ahlfors_limit,
    comparison
};

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);

struct Tolerances {
    double ineq_slack = 1e-8;
    double subharmonic_slack = 1e-4;
    double integration_tol = 1e-10;
};

/// Polar evaluation grid: rings at r_k = k * r_max / n_radial (k = 1..n_radial),
/// angles theta_j = 2 pi j / n_angular. r = 0 is never a grid point.
struct PolarGrid {
    int n_radial = 64;
    int n_angular = 128;
};

/// A complete verification setup: domain metric, target surface, map, the
/// radii (rho1, rho2) of the two geodesic disks, grid and tolerances.
struct Scenario {
    std::string name;
    RadialMetric domain = RadialMetric::euclidean();
    ConformalSurface target = ConformalSurface::euclidean();
    HoloMap map = HoloMap::identity();

    /// Euclidean radius of the domain disk in use (<= domain.domain_radius()).
    double domain_radius_in_use = 1.0;
    double rho1 = 1.0;  // = h(domain_radius_in_use), set by finalize()
    double rho2 = 1.0;  // geodesic radius of the target disk

    PolarGrid grid;
    Tolerances tol;

    // ahlfors_limit inputs
    Complex z2 = 0.5;
    std::vector<double> r0_sequence = {0.9, 0.99, 0.999};

    /// Derives rho1 from the domain radius in use. Call after construction.
    void finalize();
    /// Outermost grid ring; strictly inside the domain disk.
    double grid_rmax() const { return 0.98 * domain_radius_in_use; }
};

enum class Verdict { pass, fail, hypothesis_violated };

std::string to_string(Verdict v);

struct HypothesisCheck {
    std::string name;
    bool passed = true;
    double magnitude = 0.0;  // worst violation size (0 when passed)
    std::string detail;
};

struct PointRecord {
    int ring = 0, angle = 0;
    double r = 0.0, theta = 0.0;
    double rho_hat = 0.0;   // geodesic radius of the point
    double rho_image = 0.0; // distance of the image from the center
    double margin = 0.0;
    double u = std::numeric_limits<double>::quiet_NaN();
    double lap_u = std::numeric_limits<double>::quiet_NaN();
    bool in_chart = true;
};

struct Report {
    std::string scenario_name;
    Mode mode = Mode::theorem1;
    Verdict verdict = Verdict::pass;
    std::vector<HypothesisCheck> hypotheses;
    int n_points = 0;
    double min_margin = 0.0, max_margin = 0.0, mean_margin = 0.0;
    /// Named per-check scalars, in a stable emission order.
    std::vector<std::pair<std::string, double>> scalars;
    std::vector<PointRecord> points;

    bool hypotheses_pass() const;
    void set_scalar(const std::string& key, double value);
    const double* find_scalar(const std::string& key) const;
};

}  // namespace shrink
