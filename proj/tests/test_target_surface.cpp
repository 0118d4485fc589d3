#include <doctest.h>

#include <cmath>
#include <numbers>

#include "shrink/target_surface.hpp"

using namespace shrink;

TEST_CASE("conformal factors at sample points") {
    CHECK(ConformalSurface::poincare().factor(Complex(0.5, 0.0)) ==
          doctest::Approx(2.0 / 0.75).epsilon(1e-12));
    CHECK(ConformalSurface::spherical().factor(Complex(0.0, 1.0)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ConformalSurface::curvature_scaled(2.0).factor(Complex(0.0, 0.0)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ConformalSurface::euclidean().factor(Complex(3.0, 4.0)) == 1.0);
    CHECK_THROWS_AS(ConformalSurface::poincare().factor(Complex(1.5, 0.0)),
                    std::domain_error);
}

TEST_CASE("numerical Gauss curvature recovers the constants") {
    ConformalSurface hyp = ConformalSurface::poincare();
    for (Complex w : {Complex(0.2, 0.0), Complex(0.3, 0.4), Complex(0.0, 0.85)})
        CHECK(hyp.gauss_curvature(w) == doctest::Approx(-1.0).epsilon(1e-5));

    ConformalSurface sph = ConformalSurface::spherical();
    for (Complex w : {Complex(0.5, 0.0), Complex(1.0, 1.0)})
        CHECK(sph.gauss_curvature(w) == doctest::Approx(1.0).epsilon(1e-5));

    CHECK(std::fabs(ConformalSurface::euclidean().gauss_curvature(
              Complex(2.0, 1.0))) < 1e-7);
    CHECK(ConformalSurface::curvature_scaled(0.5).gauss_curvature(
              Complex(0.4, 0.2)) == doctest::Approx(-0.25).epsilon(1e-5));
}

TEST_CASE("hyperbolic distance to the center") {
    ConformalSurface hyp = ConformalSurface::poincare();
    CHECK(hyp.distance_to_center(Complex(0.25, 0.0)) ==
          doctest::Approx(std::log(5.0 / 3.0)).epsilon(1e-10));
    // |0.3 + 0.4i| = 0.5, and the distance only depends on the modulus.
    CHECK(hyp.distance_to_center(Complex(0.3, 0.4)) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-10));
    CHECK(hyp.distance_to_center(Complex(0.0, 0.0)) == 0.0);
    CHECK_THROWS_AS(hyp.distance_to_center(Complex(1.0, 0.5)), std::domain_error);
}

TEST_CASE("distance profile inverts cleanly") {
    ConformalSurface hyp = ConformalSurface::poincare();
    for (double r : {0.1, 0.45, 0.8}) {
        const double rho = hyp.distance_to_center(Complex(r, 0.0));
        CHECK(hyp.radius_at_distance(rho) == doctest::Approx(r).epsilon(1e-9));
    }
    CHECK(hyp.max_distance() > 19.0);  // log(2 / clamp) at the rim
    CHECK_THROWS_AS(hyp.radius_at_distance(1e9), std::domain_error);
}

TEST_CASE("ray integral agrees with the radial profile when symmetric") {
    auto mu = [](double t) { return 1.0 / (1.0 + t * t); };
    ConformalSurface radial = ConformalSurface::custom_radial(mu, 5.0);
    ConformalSurface general = ConformalSurface::custom(
        [mu](Complex w) { return mu(std::abs(w)); }, 5.0);
    CHECK(radial.radially_symmetric());
    CHECK_FALSE(general.radially_symmetric());
    for (Complex w : {Complex(0.5, 0.0), Complex(1.0, 2.0), Complex(-3.0, 1.0)})
        CHECK(general.distance_to_center(w) ==
              doctest::Approx(radial.distance_to_center(w)).epsilon(1e-9));
    CHECK_THROWS_AS(general.max_distance(), std::logic_error);
}

TEST_CASE("Jacobi solver reproduces sinh, sin, and the linear solution") {
    JacobiSolution hyp = jacobi_solve([](double) { return -1.0; }, 3.0);
    for (double rho : {0.2, 0.9, 1.7, 2.5, 3.0}) {
        CHECK(hyp.value(rho) == doctest::Approx(std::sinh(rho)).epsilon(1e-6));
        CHECK(hyp.derivative(rho) == doctest::Approx(std::cosh(rho)).epsilon(1e-5));
    }
    CHECK_FALSE(hyp.first_zero.has_value());

    JacobiSolution sph = jacobi_solve([](double) { return 1.0; }, 3.5);
    REQUIRE(sph.first_zero.has_value());
    CHECK(*sph.first_zero == doctest::Approx(std::numbers::pi).epsilon(1e-4));
    CHECK(sph.value(1.0) == doctest::Approx(std::sin(1.0)).epsilon(1e-6));

    JacobiSolution flat = jacobi_solve([](double) { return 0.0; }, 2.0);
    CHECK(flat.value(1.3) == doctest::Approx(1.3).epsilon(1e-10));
    CHECK(flat.log_derivative(0.5) == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("Jacobi solution guards its domain") {
    JacobiSolution s = jacobi_solve([](double) { return 0.0; }, 1.0);
    CHECK_THROWS_AS(s.value(-0.1), std::domain_error);
    CHECK_THROWS_AS(s.value(1.5), std::domain_error);
    CHECK_THROWS_AS(jacobi_solve([](double) { return 0.0; }, -1.0),
                    std::invalid_argument);
}

TEST_CASE("comparison margins: more negative curvature grows faster circles") {
    ComparisonMargins cm = comparison_check([](double) { return -1.0; },
                                            [](double) { return 0.0; }, 0.01, 3.0);
    CHECK(cm.hypothesis_ok);
    CHECK(cm.pass);
    CHECK(cm.min_margin >= -1e-9);
    // Spot check: the factor margin is sinh(rho) - rho.
    for (size_t i = 0; i < cm.rho.size(); i += 50) {
        CHECK(cm.factor[i] ==
              doctest::Approx(std::sinh(cm.rho[i]) - cm.rho[i]).epsilon(1e-6));
        CHECK(cm.length[i] == doctest::Approx(2.0 * std::numbers::pi * cm.factor[i]));
    }
}

TEST_CASE("comparison margins vanish for identical curvature") {
    ComparisonMargins cm = comparison_check([](double) { return -1.0; },
                                            [](double) { return -1.0; }, 0.01, 3.0);
    CHECK(cm.pass);
    for (size_t i = 0; i < cm.rho.size(); ++i) {
        CHECK(std::fabs(cm.log_deriv[i]) < 1e-10);
        CHECK(std::fabs(cm.factor[i]) < 1e-10);
        CHECK(std::fabs(cm.length[i]) < 1e-10);
    }
}

TEST_CASE("comparison check flags a reversed curvature ordering") {
    ComparisonMargins cm = comparison_check([](double) { return 0.0; },
                                            [](double) { return -1.0; }, 0.01, 2.0);
    CHECK_FALSE(cm.hypothesis_ok);
    CHECK(cm.worst_hypothesis_gap == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cm.min_margin < 0.0);
}
