#include "shrink/scenario.hpp"

#include <stdexcept>

namespace shrink {

std::string to_string(Mode m) {
    switch (m) {
        case Mode::theorem1: return "theorem1";
        case Mode::theorem2: return "theorem2";
        case Mode::classical: return "classical";
        case Mode::example1: return "example1";
        case Mode::example2: return "example2";
        case Mode::ahlfors_limit: return "ahlfors_limit";
        case Mode::comparison: return "comparison";
    }
    return "?";
}

Mode mode_from_string(const std::string& s) {
    if (s == "theorem1") return Mode::theorem1;
    if (s == "theorem2") return Mode::theorem2;
    if (s == "classical") return Mode::classical;
    if (s == "example1") return Mode::example1;
    if (s == "example2") return Mode::example2;
    if (s == "ahlfors_limit") return Mode::ahlfors_limit;
    if (s == "comparison") return Mode::comparison;
    throw std::invalid_argument("unknown mode: " + s);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::hypothesis_violated: return "HYPOTHESIS_VIOLATED";
    }
    return "?";
}

void Scenario::finalize() {
    if (domain_radius_in_use <= 0.0 ||
        domain_radius_in_use > domain.domain_radius())
        throw std::invalid_argument(
            "scenario: domain radius in use must lie in (0, R]");
    rho1 = domain.geodesic_radius(domain_radius_in_use);
    if (grid.n_radial < 2 || grid.n_angular < 4)
        throw std::invalid_argument("scenario: grid too small");
}

bool Report::hypotheses_pass() const {
    for (const auto& h : hypotheses)
        if (!h.passed) return false;
    return true;
}

void Report::set_scalar(const std::string& key, double value) {
    for (auto& [k, v] : scalars) {
        if (k == key) {
            v = value;
            return;
        }
    }
    scalars.emplace_back(key, value);
}

const double* Report::find_scalar(const std::string& key) const {
    for (const auto& [k, v] : scalars)
        if (k == key) return &v;
    return nullptr;
}

}  // namespace shrink
