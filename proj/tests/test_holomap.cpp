#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "shrink/holomap.hpp"

using namespace shrink;

namespace {

Complex numeric_deriv(const HoloMap& f, Complex z) {
    const double h = 1e-6;
    return (f.eval(z + Complex(h, 0)) - f.eval(z - Complex(h, 0))) / (2.0 * h);
}

}  // namespace

TEST_CASE("catalog maps evaluate to hand values") {
    CHECK(HoloMap::identity().eval(Complex(0.3, -0.2)) == Complex(0.3, -0.2));
    CHECK(std::abs(HoloMap::rotation_scale(Complex(0.0, 2.0)).eval(1.0) -
                   Complex(0.0, 2.0)) < 1e-15);
    CHECK(std::abs(HoloMap::power(3).eval(Complex(0.0, 1.0)) -
                   Complex(0.0, -1.0)) < 1e-15);
    // (0.5 - 0.3) / (1 - 0.15) = 0.2 / 0.85
    CHECK(std::abs(HoloMap::blaschke(0.3).eval(0.5) - Complex(0.2 / 0.85, 0.0)) <
          1e-15);
    // z/2 + z^2/4 at z = 2 is 2.
    CHECK(std::abs(HoloMap::polynomial({0.5, 0.25}).eval(2.0) - Complex(2.0, 0.0)) <
          1e-14);
    const HoloMap rot = HoloMap::moebius_disk(0.0, std::numbers::pi);
    CHECK(std::abs(rot.eval(0.5) - Complex(-0.5, 0.0)) < 1e-15);
}

TEST_CASE("exact derivatives match hand values") {
    CHECK(std::abs(HoloMap::power(4).deriv(Complex(1.0, 1.0)) -
                   4.0 * std::pow(Complex(1.0, 1.0), 3)) < 1e-13);
    // Blaschke derivative at the origin is 1 - |a|^2.
    for (Complex a : {Complex(0.5, 0.0), Complex(0.3, -0.4)})
        CHECK(std::abs(HoloMap::blaschke(a).deriv(0.0) -
                       Complex(1.0 - std::norm(a), 0.0)) < 1e-14);
    CHECK(std::abs(HoloMap::polynomial({0.5, 0.25}).deriv(1.0) -
                   Complex(1.0, 0.0)) < 1e-14);
}

TEST_CASE("analytic derivative agrees with the difference quotient") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-0.6, 0.6);
    std::vector<HoloMap> maps = {
        HoloMap::power(2),
        HoloMap::blaschke(Complex(0.2, 0.3)),
        HoloMap::moebius_disk(Complex(-0.1, 0.25), 0.7),
        HoloMap::polynomial({Complex(0.4, 0.1), Complex(0.0, -0.2), 0.1}),
        HoloMap::compose({HoloMap::blaschke(0.3), HoloMap::power(2),
                          HoloMap::rotation_scale(Complex(0.5, 0.5))}),
    };
    for (const HoloMap& f : maps) {
        for (int i = 0; i < 100; ++i) {
            const Complex z(dist(rng), dist(rng));
            CHECK(std::abs(f.deriv(z) - numeric_deriv(f, z)) < 1e-6);
        }
    }
}

TEST_CASE("composition applies first-to-last with the chain rule") {
    const HoloMap f = HoloMap::compose({HoloMap::power(2), HoloMap::blaschke(0.1)});
    const Complex z(0.4, 0.1);
    const Complex w = HoloMap::blaschke(0.1).eval(HoloMap::power(2).eval(z));
    CHECK(std::abs(f.eval(z) - w) < 1e-15);
    const Complex d = HoloMap::blaschke(0.1).deriv(HoloMap::power(2).eval(z)) *
                      HoloMap::power(2).deriv(z);
    CHECK(std::abs(f.deriv(z) - d) < 1e-14);
}

TEST_CASE("inverse Blaschke factors cancel") {
    const HoloMap f = HoloMap::compose(
        {HoloMap::blaschke(0.5), HoloMap::blaschke(-0.5)});
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> dist(-0.55, 0.55);
    for (int i = 0; i < 50; ++i) {
        const Complex z(dist(rng), dist(rng));
        CHECK(std::abs(f.eval(z) - z) < 1e-12);
    }
}

TEST_CASE("zero finding across the catalog") {
    {
        auto zs = HoloMap::power(2).zeros(1.0);
        REQUIRE(zs.size() == 1);
        CHECK(std::abs(zs[0].location) < 1e-12);
        CHECK(zs[0].multiplicity == 2);
    }
    {
        auto zs = HoloMap::blaschke(Complex(0.3, 0.2)).zeros(1.0);
        REQUIRE(zs.size() == 1);
        CHECK(std::abs(zs[0].location - Complex(0.3, 0.2)) < 1e-12);
        CHECK(zs[0].multiplicity == 1);
    }
    {
        // z/2 + z^2/4 vanishes at 0 and -2.
        auto zs = HoloMap::polynomial({0.5, 0.25}).zeros(3.0);
        REQUIRE(zs.size() == 2);
        bool near0 = false, near2 = false;
        for (const auto& z : zs) {
            if (std::abs(z.location) < 1e-9) near0 = true;
            if (std::abs(z.location - Complex(-2.0, 0.0)) < 1e-9) near2 = true;
        }
        CHECK(near0);
        CHECK(near2);
        CHECK(HoloMap::polynomial({0.5, 0.25}).zeros(1.0).size() == 1);
    }
    {
        // Chain with zeros at 0 and 0.6/1.09.
        const HoloMap f = HoloMap::compose(
            {HoloMap::blaschke(0.3), HoloMap::power(2), HoloMap::blaschke(0.09)});
        auto zs = f.zeros(0.9);
        REQUIRE(zs.size() == 2);
        bool near0 = false, nearz = false;
        for (const auto& z : zs) {
            if (std::abs(z.location) < 1e-8) near0 = true;
            if (std::abs(z.location - Complex(0.6 / 1.09, 0.0)) < 1e-8) nearz = true;
        }
        CHECK(near0);
        CHECK(nearz);
    }
}

TEST_CASE("disk automorphisms have unit differential norm in the hyperbolic metric") {
    const RadialMetric dom = RadialMetric::poincare();
    const ConformalSurface tgt = ConformalSurface::poincare();
    const HoloMap f = HoloMap::blaschke(Complex(0.3, -0.1));
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> dist(-0.6, 0.6);
    for (int i = 0; i < 50; ++i) {
        const Complex z(dist(rng), dist(rng));
        CHECK(df_norm(f, dom, tgt, z) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("holomorphic self-maps of the disk never expand the hyperbolic metric") {
    const RadialMetric dom = RadialMetric::poincare();
    const ConformalSurface tgt = ConformalSurface::poincare();
    std::mt19937 rng(321);
    std::uniform_real_distribution<double> dist(-0.65, 0.65);
    for (const HoloMap& f :
         {HoloMap::power(2), HoloMap::polynomial({0.5, 0.25}),
          HoloMap::compose({HoloMap::blaschke(0.2), HoloMap::power(3)})}) {
        for (int i = 0; i < 100; ++i) {
            const Complex z(dist(rng), dist(rng));
            CHECK(df_norm(f, dom, tgt, z) <= 1.0 + 1e-8);
        }
    }
}

TEST_CASE("df_norm guards domain and chart") {
    const RadialMetric dom = RadialMetric::poincare();
    const ConformalSurface tgt = ConformalSurface::poincare();
    CHECK_THROWS_AS(df_norm(HoloMap::identity(), dom, tgt, Complex(2.0, 0.0)),
                    std::domain_error);
    CHECK_THROWS_AS(
        df_norm(HoloMap::rotation_scale(3.0), dom, tgt, Complex(0.5, 0.0)),
        std::domain_error);
}

TEST_CASE("constructor validation and descriptions") {
    CHECK_THROWS_AS(HoloMap::power(0), std::invalid_argument);
    CHECK_THROWS_AS(HoloMap::blaschke(Complex(1.2, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(HoloMap::polynomial({}), std::invalid_argument);
    CHECK_THROWS_AS(HoloMap::compose({}), std::invalid_argument);
    CHECK_FALSE(HoloMap::power(2).describe().empty());
    CHECK_FALSE(HoloMap::compose({HoloMap::identity()}).describe().empty());
}
