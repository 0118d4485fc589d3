#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shrink/numerics.hpp"

namespace shrink {

using Complex = std::complex<double>;

/// Metric mu(w)^2 |dw|^2 on a coordinate disk |w| < W around the image
/// center. Radially symmetric surfaces carry an exact distance profile; for
/// general factors the ray integral is an upper bound on the true distance,
/// which is the safe direction for one-sided shrinking checks.
class ConformalSurface {
public:
    enum class Kind { euclidean, poincare, spherical, curvature_scaled, custom_radial };

    static ConformalSurface euclidean(double radius = 100.0);
    static ConformalSurface poincare();
    static ConformalSurface spherical(double radius = 1.0e3);
    /// Constant curvature -a^2 on the unit disk (a > 0).
    static ConformalSurface curvature_scaled(double a);
    static ConformalSurface custom_radial(std::function<double(double)> factor,
                                          double radius);
    /// General conformal factor; distances fall back to the ray integral.
    static ConformalSurface custom(std::function<double(Complex)> factor,
                                   double radius);
    /// Shares the two-column (r, mu) table format of RadialMetric.
    static ConformalSurface from_table_file(const std::string& path);

    Kind kind() const { return kind_; }
    bool radially_symmetric() const { return symmetric_; }
    double coordinate_radius() const { return radius_; }
    double factor(Complex w) const;

    /// Five-point stencil on log mu: K = -laplacian(log mu) / mu^2.
    double gauss_curvature(Complex w) const;

    /// Geodesic distance from the center to w. Exact for radially symmetric
    /// factors; a ray-integral upper bound otherwise.
    double distance_to_center(Complex w) const;

    /// Largest representable distance (radially symmetric surfaces).
    double max_distance() const;
    /// Inverse of the radial distance profile (radially symmetric surfaces).
    double radius_at_distance(double rho) const;

private:
    ConformalSurface(Kind kind, std::function<double(Complex)> factor,
                     std::function<double(double)> radial, double radius,
                     double rim);

    Kind kind_;
    bool symmetric_;
    double radius_;  // declared coordinate radius W
    double rim_;     // clamped evaluation rim (factor may diverge at W)
    std::function<double(Complex)> factor_;
    std::function<double(double)> radial_factor_;  // set when symmetric
    num::MonotoneIntegral profile_;                // set when symmetric
};

/// Sampled solution of the Jacobi equation G'' = -K G, G(0) = 0, G'(0) = 1.
struct JacobiSolution {
    double rho_max = 0.0;
    double step = 0.0;
    std::vector<double> g;   // G at i * step
    std::vector<double> gp;  // G' at i * step
    std::optional<double> first_zero;

    double value(double rho) const;
    double derivative(double rho) const;
    double log_derivative(double rho) const;  // G'/G
};

/// Classical RK4, fixed step, halved until two refinements agree within 1e-8
/// (relative). Flags the first zero of G past rho = 0 if one occurs.
JacobiSolution jacobi_solve(const std::function<double(double)>& curvature,
                            double rho_max);

/// Per-radius margins of the Riemannian comparison lemma for two curvature
/// profiles K <= K_hat: (G'/G - Ghat'/Ghat), (G - Ghat), and the geodesic
/// circle lengths 2 pi (G - Ghat).
struct ComparisonMargins {
    std::vector<double> rho;
    std::vector<double> log_deriv;
    std::vector<double> factor;
    std::vector<double> length;
    bool hypothesis_ok = true;          // K <= K_hat at every sample
    double worst_hypothesis_gap = 0.0;  // max over samples of K - K_hat
    bool pass = true;
    double min_margin = 0.0;
};

ComparisonMargins comparison_check(const std::function<double(double)>& curvature,
                                   const std::function<double(double)>& curvature_hat,
                                   double rho_lo, double rho_hi,
                                   int samples = 256, double tol = 1e-9);

}  // namespace shrink
