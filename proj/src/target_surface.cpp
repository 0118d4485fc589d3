#include "shrink/target_surface.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>

#include "shrink/radial_metric.hpp"

namespace shrink {

namespace {
constexpr double kIntegrationTol = 1e-10;
constexpr double kRimClamp = 1e-8;  // hyperbolic factors diverge at the rim
}  // namespace

ConformalSurface::ConformalSurface(Kind kind, std::function<double(Complex)> factor,
                                   std::function<double(double)> radial,
                                   double radius, double rim)
    : kind_(kind),
      symmetric_(static_cast<bool>(radial)),
      radius_(radius),
      rim_(rim),
      factor_(std::move(factor)),
      radial_factor_(std::move(radial)) {
    if (symmetric_) {
        profile_ = num::MonotoneIntegral(radial_factor_, rim_, kIntegrationTol, 4096);
    }
}

ConformalSurface ConformalSurface::euclidean(double radius) {
    auto radial = [](double) { return 1.0; };
    return ConformalSurface(Kind::euclidean,
                            [](Complex) { return 1.0; }, radial, radius, radius);
}

ConformalSurface ConformalSurface::poincare() {
    const double rim = 1.0 - kRimClamp;
    auto radial = [rim](double t) {
        t = std::min(t, rim);
        return 2.0 / (1.0 - t * t);
    };
    return ConformalSurface(Kind::poincare,
                            [radial](Complex w) { return radial(std::abs(w)); },
                            radial, 1.0, rim);
}

ConformalSurface ConformalSurface::spherical(double radius) {
    auto radial = [](double t) { return 2.0 / (1.0 + t * t); };
    return ConformalSurface(Kind::spherical,
                            [radial](Complex w) { return radial(std::abs(w)); },
                            radial, radius, radius);
}

ConformalSurface ConformalSurface::curvature_scaled(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("curvature_scaled: a must be positive");
    const double rim = 1.0 - kRimClamp;
    auto radial = [a, rim](double t) {
        t = std::min(t, rim);
        return 2.0 / (a * (1.0 - t * t));
    };
    return ConformalSurface(Kind::curvature_scaled,
                            [radial](Complex w) { return radial(std::abs(w)); },
                            radial, 1.0, rim);
}

ConformalSurface ConformalSurface::custom_radial(std::function<double(double)> factor,
                                                 double radius) {
    if (radius <= 0.0) throw std::invalid_argument("surface radius must be positive");
    auto f = factor;
    return ConformalSurface(Kind::custom_radial,
                            [f](Complex w) { return f(std::abs(w)); },
                            std::move(factor), radius, radius);
}

ConformalSurface ConformalSurface::custom(std::function<double(Complex)> factor,
                                          double radius) {
    if (radius <= 0.0) throw std::invalid_argument("surface radius must be positive");
    return ConformalSurface(Kind::custom_radial, std::move(factor), nullptr,
                            radius, radius);
}

ConformalSurface ConformalSurface::from_table_file(const std::string& path) {
    // Reuse the metric table loader; the formats are identical.
    RadialMetric m = RadialMetric::from_table_file(path);
    const double radius = m.domain_radius();
    return custom_radial([m](double t) { return m.factor(t); }, radius);
}

double ConformalSurface::factor(Complex w) const {
    if (std::abs(w) > radius_)
        throw std::domain_error("factor: point outside the coordinate disk");
    return factor_(w);
}

double ConformalSurface::gauss_curvature(Complex w) const {
    // Step shrinks toward the rim, where the factor may diverge and the
    // truncation error of the stencil scales like (step / (rim - |w|))^2.
    const double gap = rim_ - std::abs(w);
    if (gap <= 0.0)
        throw std::domain_error("gauss_curvature: stencil leaves the disk");
    const double step = std::min(1e-4 * std::min(radius_, 1.0), 1e-3 * gap);
    if (std::abs(w) + step * std::numbers::sqrt2 >= rim_)
        throw std::domain_error("gauss_curvature: stencil leaves the disk");
    auto log_mu = [this](Complex p) { return std::log(factor_(p)); };
    const double lap =
        (log_mu(w + Complex(step, 0)) + log_mu(w - Complex(step, 0)) +
         log_mu(w + Complex(0, step)) + log_mu(w - Complex(0, step)) -
         4.0 * log_mu(w)) /
        (step * step);
    const double mu = factor_(w);
    return -lap / (mu * mu);
}

double ConformalSurface::distance_to_center(Complex w) const {
    const double r = std::abs(w);
    if (r >= radius_)
        throw std::domain_error("distance_to_center: point outside the coordinate disk");
    if (r == 0.0) return 0.0;
    if (symmetric_) return profile_.value(std::min(r, rim_));
    // Ray integral along t -> t w; an upper bound on the geodesic distance.
    return num::integrate([this, w, r](double t) { return factor_(t * w) * r; },
                          0.0, 1.0, kIntegrationTol);
}

double ConformalSurface::max_distance() const {
    if (!symmetric_)
        throw std::logic_error("max_distance: surface is not radially symmetric");
    return profile_.total();
}

double ConformalSurface::radius_at_distance(double rho) const {
    if (!symmetric_)
        throw std::logic_error("radius_at_distance: surface is not radially symmetric");
    if (rho < 0.0 || rho >= profile_.total())
        throw std::domain_error("radius_at_distance: rho outside [0, max distance)");
    return profile_.inverse(rho);
}

double JacobiSolution::value(double rho) const {
    if (rho < 0.0 || rho > rho_max)
        throw std::domain_error("JacobiSolution: rho outside [0, rho_max]");
    const size_t n = g.size() - 1;
    size_t i = std::min(static_cast<size_t>(rho / step), n - 1);
    const double t = (rho - i * step) / step;
    // Cubic Hermite between stored nodes.
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
    const double h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t);
    const double h11 = t * t * (t - 1);
    return h00 * g[i] + h10 * step * gp[i] + h01 * g[i + 1] + h11 * step * gp[i + 1];
}

double JacobiSolution::derivative(double rho) const {
    if (rho < 0.0 || rho > rho_max)
        throw std::domain_error("JacobiSolution: rho outside [0, rho_max]");
    const size_t n = gp.size() - 1;
    size_t i = std::min(static_cast<size_t>(rho / step), n - 1);
    const double t = (rho - i * step) / step;
    // Hermite interpolation of G' using G'' = -K G is overkill here; linear
    // interpolation of the stored derivative keeps the error at O(step^2).
    return (1 - t) * gp[i] + t * gp[i + 1];
}

double JacobiSolution::log_derivative(double rho) const {
    const double v = value(rho);
    if (v == 0.0) throw std::domain_error("log_derivative: G vanishes");
    return derivative(rho) / v;
}

namespace {

JacobiSolution rk4_jacobi(const std::function<double(double)>& curvature,
                          double rho_max, double step) {
    const size_t n = static_cast<size_t>(std::ceil(rho_max / step));
    JacobiSolution sol;
    sol.rho_max = rho_max;
    sol.step = rho_max / static_cast<double>(n);
    sol.g.reserve(n + 1);
    sol.gp.reserve(n + 1);
    double y = 0.0, yp = 1.0;
    sol.g.push_back(y);
    sol.gp.push_back(yp);
    const double h = sol.step;
    for (size_t i = 0; i < n; ++i) {
        const double x = i * h;
        auto acc = [&](double xx, double gg) { return -curvature(xx) * gg; };
        const double k1 = yp, l1 = acc(x, y);
        const double k2 = yp + 0.5 * h * l1, l2 = acc(x + 0.5 * h, y + 0.5 * h * k1);
        const double k3 = yp + 0.5 * h * l2, l3 = acc(x + 0.5 * h, y + 0.5 * h * k2);
        const double k4 = yp + h * l3, l4 = acc(x + h, y + h * k3);
        y += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
        yp += h / 6.0 * (l1 + 2 * l2 + 2 * l3 + l4);
        if (!std::isfinite(y) || !std::isfinite(yp))
            throw std::runtime_error("jacobi_solve: solution blew up");
        sol.g.push_back(y);
        sol.gp.push_back(yp);
    }
    return sol;
}

}  // namespace

JacobiSolution jacobi_solve(const std::function<double(double)>& curvature,
                            double rho_max) {
    if (!(rho_max > 0.0)) throw std::invalid_argument("jacobi_solve: rho_max must be positive");
    double step = 1e-4;
    if (step < rho_max * 1e-7)
        throw std::runtime_error("jacobi_solve: step size underflow");
    JacobiSolution coarse = rk4_jacobi(curvature, rho_max, step);
    for (int halvings = 0; halvings < 6; ++halvings) {
        JacobiSolution fine = rk4_jacobi(curvature, rho_max, step * 0.5);
        const double scale = std::max(1.0, std::fabs(fine.g.back()));
        if (std::fabs(fine.g.back() - coarse.g.back()) <= 1e-8 * scale) {
            coarse = std::move(fine);
            break;
        }
        step *= 0.5;
        if (step < 1e-7)
            throw std::runtime_error("jacobi_solve: step size underflow");
        coarse = std::move(fine);
    }
    // Locate the first zero of G past rho = 0, if any.
    JacobiSolution& sol = coarse;
    for (size_t i = 1; i + 1 < sol.g.size(); ++i) {
        if (sol.g[i] > 0.0 && sol.g[i + 1] <= 0.0) {
            double lo = i * sol.step, hi = (i + 1) * sol.step;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                (sol.value(mid) > 0.0 ? lo : hi) = mid;
            }
            sol.first_zero = 0.5 * (lo + hi);
            break;
        }
    }
    return sol;
}

ComparisonMargins comparison_check(const std::function<double(double)>& curvature,
                                   const std::function<double(double)>& curvature_hat,
                                   double rho_lo, double rho_hi, int samples,
                                   double tol) {
    if (!(0.0 < rho_lo && rho_lo < rho_hi))
        throw std::invalid_argument("comparison_check: need 0 < rho_lo < rho_hi");
    JacobiSolution g = jacobi_solve(curvature, rho_hi);
    JacobiSolution g_hat = jacobi_solve(curvature_hat, rho_hi);

    ComparisonMargins out;
    double limit = rho_hi;
    if (g.first_zero) limit = std::min(limit, *g.first_zero);
    if (g_hat.first_zero) limit = std::min(limit, *g_hat.first_zero);

    out.min_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        const double rho =
            rho_lo + (rho_hi - rho_lo) * i / static_cast<double>(samples - 1);
        if (rho >= limit) break;
        const double gap = curvature(rho) - curvature_hat(rho);
        if (gap > 1e-12) {
            out.hypothesis_ok = false;
            out.worst_hypothesis_gap = std::max(out.worst_hypothesis_gap, gap);
        }
        const double m_log = g.log_derivative(rho) - g_hat.log_derivative(rho);
        const double m_factor = g.value(rho) - g_hat.value(rho);
        out.rho.push_back(rho);
        out.log_deriv.push_back(m_log);
        out.factor.push_back(m_factor);
        out.length.push_back(2.0 * std::numbers::pi * m_factor);
        out.min_margin = std::min({out.min_margin, m_log, m_factor,
                                   2.0 * std::numbers::pi * m_factor});
    }
    out.pass = out.min_margin >= -tol;
    return out;
}

}  // namespace shrink
