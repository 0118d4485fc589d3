#pragma once

#include <functional>
#include <string>
#include <vector>

#include "shrink/numerics.hpp"

namespace shrink {

/// Circularly symmetric conformal metric lambda(r)^2 |dz|^2 on a euclidean
/// disk |z| < R. Owns the transforms between euclidean radius r and geodesic
/// radius rho: h(r) = int_0^r lambda(t) dt and its inverse H, the circle
/// factor G(rho) = H(rho) lambda(H(rho)), and the curvature/Laplacian of the
/// metric along radii.
///
/// Values are immutable after construction; every operation is pure.
class RadialMetric {
public:
    enum class Kind { euclidean, poincare, spherical, custom };

    /// Large finite stand-in for an unbounded coordinate domain.
    static constexpr double kDefaultCap = 100.0;
    /// Evaluation near the rim of the hyperbolic disk is clamped to
    /// r <= 1 - kPoincareClamp; h diverges at r = 1.
    static constexpr double kPoincareClamp = 1e-8;

    static RadialMetric euclidean(double scale = 1.0, double radius = kDefaultCap);
    static RadialMetric poincare();
    static RadialMetric spherical(double radius = 1.0e3);
    static RadialMetric custom(std::function<double(double)> factor, double radius);
    /// Two-column table (r, lambda(r)) with strictly increasing r, cubically
    /// interpolated. The domain radius is the last table abscissa.
    static RadialMetric from_table(const std::vector<double>& r,
                                   const std::vector<double>& factor);
    static RadialMetric from_table_file(const std::string& path);

    Kind kind() const { return kind_; }
    double domain_radius() const { return radius_; }
    double factor(double r) const;

    /// h(R) at the (possibly clamped) rim; geodesic radii live in [0, this).
    double max_geodesic_radius() const { return h_.total(); }

    double geodesic_radius(double r) const;     // h(r)
    double euclidean_radius(double rho) const;  // H(rho)
    double circle_factor(double rho) const;     // G(rho)
    double curvature(double rho) const;
    double radial_laplacian(const std::function<double(double)>& phi, double rho) const;

private:
    RadialMetric(Kind kind, std::function<double(double)> factor, double radius,
                 double eff_radius, double integration_tol);
    double diff_step(double rho) const;

    Kind kind_;
    std::function<double(double)> factor_;
    double radius_;      // declared domain radius R
    double eff_radius_;  // integration rim (R, or the clamped hyperbolic rim)
    num::MonotoneIntegral h_;
};

}  // namespace shrink
