#pragma once

#include <span>

#include "shrink/scenario.hpp"

namespace shrink {

/// Hypothesis checks for the finite shrinking lemmas: radial symmetry of the
/// domain metric, f(0) = 0, ordering of the radii (or the extension condition
/// when rho2 > rho1), and the curvature comparison K <= K_hat on matched
/// radii. Violations are data, not exceptions.
std::vector<HypothesisCheck> check_hypotheses(const Scenario& s, Mode mode);

/// margin(z) = rho_hat(z) - rho(f(z)) on the grid.
Report verify_shrinking(const Scenario& s);

/// margin(z) = h((H(rho2)/H(rho1)) |z|) - rho(f(z)) on the grid.
Report verify_general_bound(const Scenario& s);

/// margin(z) = (rho2 / R1) |z| - rho(f(z)): the euclidean-domain bound that
/// holds whenever the target curvature is nonpositive.
Report verify_example1(const Scenario& s);

/// Euclidean-to-euclidean case: |f(z)| <= (R2/R1) |z|, plus the constancy
/// demonstration with the domain radius scaled by 10, 100, 1000.
Report verify_classical(const Scenario& s);

struct CenterNormReport {
    double norm = 0.0;
    bool ok = true;
};
CenterNormReport check_center_norm(const Scenario& s);

struct BoundaryPointReport {
    Complex b;
    bool maps_to_boundary = false;
    double boundary_gap = 0.0;      // |rho(f(b)) - rho2|
    double radial_quotient = 0.0;   // one-sided d rho / d rho_hat toward the rim
    double df_norm_at_b = 0.0;
    double deriv_abs = 0.0;         // |f'(b)|
    double sharp_bound = 0.0;       // 0 unless the euclidean unit-disk case
    bool ok = false;
};
std::vector<BoundaryPointReport> check_boundary_stretch(
    const Scenario& s, std::span<const Complex> boundary_points);

struct SubharmonicReport {
    int retained = 0;
    double min_lap_u = 0.0;
    double interior_max_u = 0.0;
    double boundary_max_u = 0.0;
    bool laplacian_ok = true;
    bool max_principle_ok = true;
    bool ok = true;
    /// u and the discrete Laplacian per grid point (NaN when not retained).
    std::vector<PointRecord> points;
};
SubharmonicReport check_subharmonicity(const Scenario& s);

struct AhlforsStage {
    double r0 = 0.0;
    double rho0 = 0.0;     // inflated max image distance over |z| = r0
    double r1_over_r0 = 0.0;
    double rho1 = 0.0;     // hyperbolic radius of the stage domain disk
    double bound = 0.0;    // recorded bound rho_tilde(zeta2)
    double min_margin = 0.0;
    Verdict stage_verdict = Verdict::pass;
};
struct AhlforsReport {
    std::vector<AhlforsStage> stages;
    double limit_value = 0.0;  // rho_hat(z2)
    bool monotone = true;
    bool converged = true;
    bool ok = true;
};
/// The rescaling procedure f_tilde(zeta) = f(r0 zeta), r0 -> 1: each stage
/// applies the finite shrinking lemma and records the bound rho_tilde(zeta2)
/// at zeta2 = z2 / r0. Convergence is asserted within a tolerance
/// proportional to (1 - r0).
AhlforsReport ahlfors_limit(const Scenario& s);

struct LaplacianComparisonReport {
    std::vector<double> rho;
    std::vector<double> margin;  // (G'/G) - (Ghat'/Ghat) at matched radius
    double min_margin = 0.0;
    bool ok = true;
};
LaplacianComparisonReport check_laplacian_comparison(
    const RadialMetric& domain, const std::function<double(double)>& target_curvature,
    double rho_lo, double rho_hi, int samples = 128, double tol = 1e-6);

}  // namespace shrink
