#include "shrink/presets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace shrink {

namespace {

ParsedScenario schwarz_classical() {
    ParsedScenario p;
    p.mode = Mode::classical;
    p.scenario.name = "schwarz-classical";
    p.scenario.domain = RadialMetric::euclidean();
    p.scenario.target = ConformalSurface::euclidean(100.0);
    p.scenario.map = HoloMap::polynomial({0.5, 0.25});
    p.scenario.domain_radius_in_use = 1.0;
    p.scenario.rho2 = 1.0;
    p.scenario.finalize();
    return p;
}

ParsedScenario pick_equality() {
    ParsedScenario p;
    p.mode = Mode::theorem1;
    p.scenario.name = "pick-equality";
    p.scenario.domain = RadialMetric::poincare();
    p.scenario.target = ConformalSurface::poincare();
    p.scenario.map =
        HoloMap::rotation_scale(std::polar(1.0, std::numbers::pi / 3.0));
    p.scenario.domain_radius_in_use = 0.9;
    p.scenario.finalize();
    p.scenario.rho2 = p.scenario.rho1;
    return p;
}

ParsedScenario example1_euclidean() {
    ParsedScenario p;
    p.mode = Mode::example1;
    p.scenario.name = "example1-euclidean";
    p.scenario.domain = RadialMetric::euclidean();
    p.scenario.target = ConformalSurface::euclidean(100.0);
    p.scenario.map = HoloMap::power(2);
    p.scenario.domain_radius_in_use = 1.0;
    p.scenario.rho2 = 1.0;
    p.scenario.finalize();
    return p;
}

ParsedScenario example2_hyperbolic() {
    ParsedScenario p;
    p.mode = Mode::example2;
    p.scenario.name = "example2-hyperbolic";
    p.scenario.domain = RadialMetric::poincare();
    p.scenario.target = ConformalSurface::poincare();
    // (-0.3)^2 = 0.09, so the chain fixes the origin.
    p.scenario.map = HoloMap::compose(
        {HoloMap::blaschke(0.3), HoloMap::power(2), HoloMap::blaschke(0.09)});
    p.scenario.domain_radius_in_use = 0.8;
    p.scenario.finalize();
    p.scenario.rho2 = p.scenario.rho1;
    return p;
}

ParsedScenario gfsl_theorem1() {
    ParsedScenario p;
    p.mode = Mode::theorem1;
    p.scenario.name = "gfsl-theorem1";
    p.scenario.domain = RadialMetric::poincare();
    p.scenario.target = ConformalSurface::poincare();
    p.scenario.map = HoloMap::power(2);
    p.scenario.domain_radius_in_use = 0.9;
    p.scenario.tol.ineq_slack = 1e-6;
    p.scenario.finalize();
    p.scenario.rho2 = p.scenario.rho1;
    return p;
}

ParsedScenario mgfsl_theorem2() {
    ParsedScenario p;
    p.mode = Mode::theorem2;
    p.scenario.name = "mgfsl-theorem2";
    p.scenario.domain = RadialMetric::euclidean();
    p.scenario.target = ConformalSurface::euclidean(100.0);
    p.scenario.map = HoloMap::rotation_scale(0.5);
    p.scenario.domain_radius_in_use = 2.0;
    p.scenario.rho2 = 1.0;
    p.scenario.finalize();
    return p;
}

ParsedScenario ahlfors() {
    ParsedScenario p;
    p.mode = Mode::ahlfors_limit;
    p.scenario.name = "ahlfors-limit";
    p.scenario.domain = RadialMetric::poincare();
    p.scenario.target = ConformalSurface::poincare();
    p.scenario.map = HoloMap::power(2);
    p.scenario.domain_radius_in_use = 0.999;
    p.scenario.rho2 = 5.0;
    p.scenario.z2 = 0.5;
    p.scenario.r0_sequence = {0.9, 0.99, 0.999};
    p.scenario.finalize();
    return p;
}

ParsedScenario stereographic() {
    ParsedScenario p;
    p.mode = Mode::theorem1;
    p.scenario.name = "stereographic";
    p.scenario.domain = RadialMetric::euclidean();
    p.scenario.target = ConformalSurface::spherical(1.0e3);
    p.scenario.map = HoloMap::identity();
    p.scenario.domain_radius_in_use = 10.0;
    p.scenario.rho2 = 3.0;
    p.scenario.finalize();
    return p;
}

ParsedScenario comparison_lemma() {
    ParsedScenario p;
    p.mode = Mode::comparison;
    p.scenario.name = "comparison-lemma";
    p.scenario.domain = RadialMetric::euclidean();
    p.scenario.target = ConformalSurface::poincare();
    p.scenario.map = HoloMap::identity();
    p.scenario.domain_radius_in_use = 3.0;
    p.scenario.rho2 = 3.0;
    p.scenario.finalize();
    return p;
}

}  // namespace

const std::vector<Preset>& preset_catalog() {
    static const std::vector<Preset> catalog = {
        {"schwarz-classical",
         "unit disk to unit disk, f(z) = z/2 + z^2/4, classical bound"},
        {"pick-equality",
         "hyperbolic rotation: the invariant-distance bound holds with equality"},
        {"example1-euclidean",
         "euclidean domain, nonpositively curved target, f(z) = z^2"},
        {"example2-hyperbolic",
         "hyperbolic subdisk, Blaschke chain fixing the origin"},
        {"gfsl-theorem1",
         "finite shrinking bound on a hyperbolic subdisk, f(z) = z^2"},
        {"mgfsl-theorem2",
         "larger target disk: bound through the rescaled radius"},
        {"ahlfors-limit",
         "rescaling sequence recovering the invariant-distance bound as r0 -> 1"},
        {"stereographic",
         "positively curved target: hypothesis violation is detected"},
        {"comparison-lemma",
         "circle-factor comparison for K = -1 against the flat reference"},
    };
    return catalog;
}

ParsedScenario make_preset(const std::string& name) {
    if (name == "schwarz-classical") return schwarz_classical();
    if (name == "pick-equality") return pick_equality();
    if (name == "example1-euclidean") return example1_euclidean();
    if (name == "example2-hyperbolic") return example2_hyperbolic();
    if (name == "gfsl-theorem1") return gfsl_theorem1();
    if (name == "mgfsl-theorem2") return mgfsl_theorem2();
    if (name == "ahlfors-limit") return ahlfors();
    if (name == "stereographic") return stereographic();
    if (name == "comparison-lemma") return comparison_lemma();
    throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace shrink
