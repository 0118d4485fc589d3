#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shrink::num {

using RealFn = std::function<double(double)>;

/// Thrown when adaptive quadrature cannot reach the requested tolerance.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    double achieved() const { return achieved_; }

private:
    double achieved_;
};

/// Adaptive Gauss-Kronrod (G7,K15) quadrature with an absolute tolerance.
double integrate(const RealFn& f, double a, double b, double abs_tol = 1e-10);

double central_first(const RealFn& f, double x, double h);
double central_second(const RealFn& f, double x, double h);

/// Cumulative integral s(r) = int_0^r density(t) dt of a positive density on
/// [0, radius]. Checkpoints computed at construction keep repeated evaluations
/// cheap and smooth in r; the inverse is a bracketed Newton iteration using
/// the density as derivative.
class MonotoneIntegral {
public:
    MonotoneIntegral() = default;
    MonotoneIntegral(RealFn density, double radius, double abs_tol = 1e-10,
                     int checkpoints = 2048);

    double radius() const { return radius_; }
    double total() const { return cum_.back(); }
    double value(double r) const;
    double inverse(double s) const;
    double density(double r) const { return density_(r); }

private:
    RealFn density_;
    double radius_ = 0.0;
    double tol_ = 1e-10;
    double dr_ = 0.0;
    std::vector<double> cum_;
};

/// Natural cubic spline through strictly increasing abscissae.
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y);
    double operator()(double x) const;
    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::vector<double> x_, y_, m_;  // m_: second derivatives at knots
};

}  // namespace shrink::num
