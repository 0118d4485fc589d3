#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "shrink/numerics.hpp"

using namespace shrink;

TEST_CASE("quadrature hits closed-form integrals") {
    CHECK(num::integrate([](double x) { return x * x; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(num::integrate([](double x) { return std::sin(x); }, 0.0,
                         std::numbers::pi) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(num::integrate([](double x) { return std::exp(-x); }, 0.0, 20.0) ==
          doctest::Approx(1.0 - std::exp(-20.0)).epsilon(1e-10));
}

TEST_CASE("quadrature handles an integrable endpoint singularity") {
    const double v =
        num::integrate([](double x) { return 1.0 / std::sqrt(x); }, 1e-12, 1.0);
    CHECK(v == doctest::Approx(2.0 - 2e-6).epsilon(1e-6));
}

TEST_CASE("quadrature respects orientation") {
    const double fwd = num::integrate([](double x) { return x; }, 0.0, 2.0);
    const double bwd = num::integrate([](double x) { return x; }, 2.0, 0.0);
    CHECK(fwd == doctest::Approx(2.0));
    CHECK(bwd == doctest::Approx(-2.0));
    CHECK(num::integrate([](double x) { return x; }, 1.0, 1.0) == 0.0);
}

TEST_CASE("central differences approximate derivatives") {
    auto f = [](double x) { return std::sin(x); };
    CHECK(num::central_first(f, 1.0, 1e-5) ==
          doctest::Approx(std::cos(1.0)).epsilon(1e-9));
    CHECK(num::central_second(f, 1.0, 1e-4) ==
          doctest::Approx(-std::sin(1.0)).epsilon(1e-6));
}

TEST_CASE("MonotoneIntegral matches the antiderivative and its inverse") {
    num::MonotoneIntegral s([](double t) { return 2.0 * t; }, 2.0);
    CHECK(s.total() == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(s.value(1.3) == doctest::Approx(1.69).epsilon(1e-12));
    CHECK(s.inverse(1.69) == doctest::Approx(1.3).epsilon(1e-12));
    CHECK(s.value(0.0) == 0.0);
    CHECK(s.inverse(0.0) == 0.0);
    CHECK(s.inverse(4.0) == 2.0);

    std::mt19937 rng(20260823);
    std::uniform_real_distribution<double> dist(1e-6, 2.0 - 1e-6);
    for (int i = 0; i < 100; ++i) {
        const double r = dist(rng);
        CHECK(std::fabs(s.inverse(s.value(r)) - r) < 1e-12);
    }
}

TEST_CASE("MonotoneIntegral round-trips a divergent hyperbolic density") {
    const double rim = 1.0 - 1e-8;
    num::MonotoneIntegral s([](double t) { return 2.0 / (1.0 - t * t); }, rim,
                            1e-10, 4096);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(0.01, 0.95);
    for (int i = 0; i < 100; ++i) {
        const double r = dist(rng);
        CHECK(s.value(r) ==
              doctest::Approx(std::log((1.0 + r) / (1.0 - r))).epsilon(1e-10));
        CHECK(std::fabs(s.inverse(s.value(r)) - r) < 1e-9);
    }
}

TEST_CASE("CubicSpline interpolates exactly at knots and well between") {
    std::vector<double> x, y;
    for (int i = 0; i <= 40; ++i) {
        x.push_back(i * 0.1);
        y.push_back(std::sin(x.back()));
    }
    num::CubicSpline sp(x, y);
    CHECK(sp(1.0) == doctest::Approx(std::sin(1.0)).epsilon(1e-12));
    CHECK(sp(1.234) == doctest::Approx(std::sin(1.234)).epsilon(1e-4));
    CHECK_THROWS_AS(sp(-0.5), std::domain_error);
    CHECK_THROWS_AS(sp(4.5), std::domain_error);
}

TEST_CASE("CubicSpline rejects bad knot sequences") {
    CHECK_THROWS_AS(num::CubicSpline({0.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(num::CubicSpline({0.0, 0.0}, {1.0, 2.0}),
                    std::invalid_argument);
}
