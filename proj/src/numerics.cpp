#include "shrink/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace shrink::num {

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
// (positive half; QUADPACK values).
constexpr std::array<double, 8> kKronrodX = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr std::array<double, 4> kGaussW = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct GkResult {
    double kronrod;
    double error;
};

GkResult gk15(const RealFn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double kronrod = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kKronrodX[i];
        const double fv = (i == 7) ? f(c) : f(c - dx) + f(c + dx);
        kronrod += kKronrodW[i] * fv;
        if (i % 2 == 1) gauss += kGaussW[i / 2] * fv;
    }
    kronrod *= h;
    gauss *= h;
    return {kronrod, std::fabs(kronrod - gauss)};
}

double integrate_rec(const RealFn& f, double a, double b, double tol,
                     double floor, int depth, double* worst) {
    const GkResult r = gk15(f, a, b);
    // `floor` is a roundoff-scale absolute bound derived from the whole
    // interval; it keeps divergent-at-the-endpoint integrands (large local
    // mass) from demanding sub-roundoff accuracy on ever-smaller leaves.
    if (r.error <= tol || r.error <= floor ||
        b - a < 1e-14 * (1.0 + std::fabs(a))) {
        *worst = std::max(*worst, r.error);
        return r.kronrod;
    }
    if (depth >= 48) {
        throw QuadratureError("quadrature failed to converge", r.error);
    }
    const double c = 0.5 * (a + b);
    return integrate_rec(f, a, c, 0.5 * tol, floor, depth + 1, worst) +
           integrate_rec(f, c, b, 0.5 * tol, floor, depth + 1, worst);
}

}  // namespace

double integrate(const RealFn& f, double a, double b, double abs_tol) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    double worst = 0.0;
    const double floor = 1e-15 * std::fabs(gk15(f, a, b).kronrod);
    return sign * integrate_rec(f, a, b, abs_tol, floor, 0, &worst);
}

double central_first(const RealFn& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

double central_second(const RealFn& f, double x, double h) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

MonotoneIntegral::MonotoneIntegral(RealFn density, double radius,
                                   double abs_tol, int checkpoints)
    : density_(std::move(density)), radius_(radius), tol_(abs_tol) {
    if (radius <= 0.0) throw std::invalid_argument("MonotoneIntegral: radius must be positive");
    if (checkpoints < 2) checkpoints = 2;
    dr_ = radius_ / checkpoints;
    cum_.resize(checkpoints + 1);
    cum_[0] = 0.0;
    const double seg_tol = tol_ / checkpoints;
    for (int k = 0; k < checkpoints; ++k) {
        cum_[k + 1] = cum_[k] + integrate(density_, k * dr_, (k + 1) * dr_, seg_tol);
    }
}

double MonotoneIntegral::value(double r) const {
    if (r <= 0.0) return 0.0;
    if (r >= radius_) return cum_.back();
    const int k = std::min(static_cast<int>(r / dr_),
                           static_cast<int>(cum_.size()) - 2);
    return cum_[k] + integrate(density_, k * dr_, r, tol_);
}

double MonotoneIntegral::inverse(double s) const {
    if (s <= 0.0) return 0.0;
    if (s >= total()) return radius_;
    // Bracket from checkpoints, then safeguarded Newton.
    auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
    int k = static_cast<int>(it - cum_.begin()) - 1;
    double lo = k * dr_;
    double hi = std::min((k + 1) * dr_, radius_);
    double r = lo + (hi - lo) * (s - cum_[k]) /
                        std::max(cum_[k + 1] - cum_[k], 1e-300);
    for (int iter = 0; iter < 100; ++iter) {
        const double fr = value(r) - s;
        if (fr > 0.0)
            hi = r;
        else
            lo = r;
        const double d = density_(r);
        double step = (d > 0.0) ? fr / d : 0.0;
        double next = r - step;
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - r) <= 1e-15 * std::max(1.0, std::fabs(r))) {
            return next;
        }
        r = next;
    }
    return r;
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const size_t n = x_.size();
    if (n < 2 || y_.size() != n)
        throw std::invalid_argument("CubicSpline: need at least two matched points");
    for (size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1]))
            throw std::invalid_argument("CubicSpline: abscissae must be strictly increasing");
    // Tridiagonal solve for natural boundary conditions.
    m_.assign(n, 0.0);
    if (n == 2) return;
    std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), d(n, 0.0);
    for (size_t i = 1; i + 1 < n; ++i) {
        const double h0 = x_[i] - x_[i - 1];
        const double h1 = x_[i + 1] - x_[i];
        a[i] = h0 / 6.0;
        b[i] = (h0 + h1) / 3.0;
        c[i] = h1 / 6.0;
        d[i] = (y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0;
    }
    for (size_t i = 2; i + 1 < n; ++i) {
        const double w = a[i] / b[i - 1];
        b[i] -= w * c[i - 1];
        d[i] -= w * d[i - 1];
    }
    for (size_t i = n - 2; i >= 1; --i) {
        m_[i] = (d[i] - c[i] * m_[i + 1]) / b[i];
        if (i == 1) break;
    }
}

double CubicSpline::operator()(double x) const {
    if (x < x_.front() - 1e-12 || x > x_.back() + 1e-12)
        throw std::domain_error("CubicSpline: evaluation outside table range");
    x = std::clamp(x, x_.front(), x_.back());
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    size_t i = std::min<size_t>(std::max<std::ptrdiff_t>(it - x_.begin() - 1, 0),
                                x_.size() - 2);
    const double h = x_[i + 1] - x_[i];
    const double t = (x_[i + 1] - x) / h;
    const double u = (x - x_[i]) / h;
    return t * y_[i] + u * y_[i + 1] +
           ((t * t * t - t) * m_[i] + (u * u * u - u) * m_[i + 1]) * h * h / 6.0;
}

}  // namespace shrink::num
