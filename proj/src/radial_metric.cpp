#include "shrink/radial_metric.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <utility>

namespace shrink {

namespace {
constexpr double kIntegrationTol = 1e-10;
}

RadialMetric::RadialMetric(Kind kind, std::function<double(double)> factor,
                           double radius, double eff_radius, double integration_tol)
    : kind_(kind),
      factor_(std::move(factor)),
      radius_(radius),
      eff_radius_(eff_radius),
      h_(factor_, eff_radius, integration_tol, 4096) {}

RadialMetric RadialMetric::euclidean(double scale, double radius) {
    if (scale <= 0.0) throw std::invalid_argument("euclidean scale must be positive");
    return RadialMetric(Kind::euclidean, [scale](double) { return scale; },
                        radius, radius, kIntegrationTol);
}

RadialMetric RadialMetric::poincare() {
    const double rim = 1.0 - kPoincareClamp;
    auto factor = [rim](double r) {
        r = std::min(r, rim);
        return 2.0 / (1.0 - r * r);
    };
    return RadialMetric(Kind::poincare, factor, 1.0, rim, kIntegrationTol);
}

RadialMetric RadialMetric::spherical(double radius) {
    return RadialMetric(Kind::spherical,
                        [](double r) { return 2.0 / (1.0 + r * r); },
                        radius, radius, kIntegrationTol);
}

RadialMetric RadialMetric::custom(std::function<double(double)> factor, double radius) {
    if (radius <= 0.0) throw std::invalid_argument("custom metric radius must be positive");
    return RadialMetric(Kind::custom, std::move(factor), radius, radius, kIntegrationTol);
}

RadialMetric RadialMetric::from_table(const std::vector<double>& r,
                                      const std::vector<double>& factor) {
    if (r.size() < 2 || r.size() != factor.size())
        throw std::invalid_argument("metric table needs at least two (r, lambda) rows");
    if (r.front() != 0.0)
        throw std::invalid_argument("metric table must start at r = 0");
    for (double v : factor)
        if (!(v > 0.0)) throw std::invalid_argument("metric table factor must be positive");
    auto spline = std::make_shared<num::CubicSpline>(r, factor);
    return custom([spline](double x) { return (*spline)(x); }, r.back());
}

RadialMetric RadialMetric::from_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open metric table: " + path);
    std::vector<double> r, f;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        double a, b;
        if (!(row >> a)) continue;  // blank line
        if (!(row >> b))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected two columns (r, lambda)");
        if (!r.empty() && !(a > r.back()))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": radii must be strictly increasing");
        r.push_back(a);
        f.push_back(b);
    }
    return from_table(r, f);
}

double RadialMetric::factor(double r) const {
    if (r < 0.0 || r > radius_)
        throw std::domain_error("radius outside metric domain");
    return factor_(std::min(r, eff_radius_));
}

double RadialMetric::geodesic_radius(double r) const {
    if (r < 0.0 || r > radius_)
        throw std::domain_error("geodesic_radius: r outside [0, R]");
    return h_.value(std::min(r, eff_radius_));
}

double RadialMetric::euclidean_radius(double rho) const {
    if (rho < 0.0 || rho >= max_geodesic_radius())
        throw std::domain_error("euclidean_radius: rho outside [0, h(R))");
    return h_.inverse(rho);
}

double RadialMetric::circle_factor(double rho) const {
    if (rho == 0.0) return 0.0;
    const double r = euclidean_radius(rho);
    return r * factor_(r);
}

double RadialMetric::diff_step(double rho) const {
    return std::max(1e-5, 1e-4 * rho);
}

double RadialMetric::curvature(double rho) const {
    // Wider stencil than the Laplacian: the circle factor carries roundoff
    // from the inverse transform, and the quotient G''/G amplifies it by
    // 1/step^2. Truncation stays ~ step^2/12 relative.
    const double d = std::min(0.5 * rho, std::max(1e-3, 2e-3 * rho));
    if (rho - d <= 0.0 || rho + d >= max_geodesic_radius())
        throw std::domain_error("curvature: rho too close to 0 or h(R)");
    auto g = [this](double x) { return circle_factor(x); };
    return -num::central_second(g, rho, d) / circle_factor(rho);
}

double RadialMetric::radial_laplacian(const std::function<double(double)>& phi,
                                      double rho) const {
    const double d = diff_step(rho);
    if (rho - d <= 0.0 || rho + d >= max_geodesic_radius())
        throw std::domain_error("radial_laplacian: rho too close to 0 or h(R)");
    auto g = [this](double x) { return circle_factor(x); };
    const double log_deriv = num::central_first(g, rho, d) / circle_factor(rho);
    return num::central_second(phi, rho, d) + log_deriv * num::central_first(phi, rho, d);
}

}  // namespace shrink
