#include "shrink/scenario_file.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace shrink {

namespace {

struct Entry {
    std::string value;
    int line;
};

using Section = std::map<std::string, Entry>;

struct Document {
    std::map<std::string, Section> sections;
    std::map<std::string, int> section_lines;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Document tokenize(const std::string& text) {
    Document doc;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ScenarioParseError(lineno, "malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ScenarioParseError(lineno, "empty section name");
            if (doc.sections.count(section))
                throw ScenarioParseError(lineno, "duplicate section [" + section + "]");
            doc.sections[section] = {};
            doc.section_lines[section] = lineno;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ScenarioParseError(lineno, "expected key = value");
        if (section.empty())
            throw ScenarioParseError(lineno, "key outside any section");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ScenarioParseError(lineno, "empty key or value");
        auto& sec = doc.sections[section];
        if (sec.count(key))
            throw ScenarioParseError(lineno, "duplicate key '" + key + "'");
        sec[key] = {value, lineno};
    }
    return doc;
}

class SectionReader {
public:
    SectionReader(const Document& doc, const std::string& name, bool required)
        : name_(name) {
        auto it = doc.sections.find(name);
        if (it == doc.sections.end()) {
            if (required)
                throw ScenarioParseError(0, "missing required section [" + name + "]");
            present_ = false;
        } else {
            section_ = it->second;
            present_ = true;
        }
    }

    bool present() const { return present_; }

    std::string get_string(const std::string& key) {
        auto it = section_.find(key);
        if (it == section_.end())
            throw ScenarioParseError(0, "[" + name_ + "] missing key '" + key + "'");
        used_.push_back(key);
        return it->second.value;
    }

    std::string get_string_or(const std::string& key, const std::string& fallback) {
        auto it = section_.find(key);
        if (it == section_.end()) return fallback;
        used_.push_back(key);
        return it->second.value;
    }

    double get_number(const std::string& key) {
        return parse_number(key, get_string(key));
    }

    double get_number_or(const std::string& key, double fallback) {
        auto it = section_.find(key);
        if (it == section_.end()) return fallback;
        used_.push_back(key);
        return parse_number(key, it->second.value);
    }

    std::vector<double> get_number_list_or(const std::string& key,
                                           std::vector<double> fallback) {
        auto it = section_.find(key);
        if (it == section_.end()) return fallback;
        used_.push_back(key);
        std::vector<double> out;
        std::istringstream ss(it->second.value);
        std::string item;
        while (std::getline(ss, item, ','))
            out.push_back(parse_number(key, trim(item)));
        if (out.empty())
            throw ScenarioParseError(it->second.line,
                                     "[" + name_ + "] empty list for '" + key + "'");
        return out;
    }

    void reject_unknown() const {
        for (const auto& [key, entry] : section_) {
            bool known = false;
            for (const auto& u : used_)
                if (u == key) known = true;
            if (!known)
                throw ScenarioParseError(entry.line, "[" + name_ + "] unknown key '" +
                                                         key + "'");
        }
    }

private:
    double parse_number(const std::string& key, const std::string& text) {
        int line = 0;
        auto it = section_.find(key);
        if (it != section_.end()) line = it->second.line;
        try {
            size_t pos = 0;
            const double v = std::stod(text, &pos);
            if (pos != text.size())
                throw std::invalid_argument("trailing characters");
            if (!std::isfinite(v))
                throw std::invalid_argument("not finite");
            return v;
        } catch (const std::exception&) {
            throw ScenarioParseError(line, "[" + name_ + "] key '" + key +
                                               "': not a finite number: " + text);
        }
    }

    std::string name_;
    Section section_;
    std::vector<std::string> used_;
    bool present_ = true;
};

double require_positive(double v, const std::string& what) {
    if (!(v > 0.0)) throw ScenarioParseError(0, what + " must be positive");
    return v;
}

RadialMetric parse_domain(SectionReader& sec, double* radius_in_use) {
    const std::string kind = sec.get_string("kind");
    *radius_in_use = require_positive(sec.get_number("radius"), "[domain] radius");
    if (kind == "euclidean") {
        const double scale = sec.get_number_or("scale", 1.0);
        const double cap = sec.get_number_or("cap", RadialMetric::kDefaultCap);
        return RadialMetric::euclidean(scale, require_positive(cap, "[domain] cap"));
    }
    if (kind == "poincare") return RadialMetric::poincare();
    if (kind == "spherical") {
        const double cap = sec.get_number_or("cap", 1.0e3);
        return RadialMetric::spherical(require_positive(cap, "[domain] cap"));
    }
    if (kind == "table")
        return RadialMetric::from_table_file(sec.get_string("table"));
    throw ScenarioParseError(0, "[domain] unknown kind '" + kind + "'");
}

ConformalSurface parse_target(SectionReader& sec, double* rho2) {
    const std::string kind = sec.get_string("kind");
    *rho2 = require_positive(sec.get_number("radius"), "[target] radius");
    if (kind == "euclidean") {
        const double cap = sec.get_number_or("cap", 100.0);
        return ConformalSurface::euclidean(require_positive(cap, "[target] cap"));
    }
    if (kind == "poincare") return ConformalSurface::poincare();
    if (kind == "spherical") {
        const double cap = sec.get_number_or("cap", 1.0e3);
        return ConformalSurface::spherical(require_positive(cap, "[target] cap"));
    }
    if (kind == "curvature_scaled")
        return ConformalSurface::curvature_scaled(
            require_positive(sec.get_number("a"), "[target] a"));
    if (kind == "table")
        return ConformalSurface::from_table_file(sec.get_string("table"));
    throw ScenarioParseError(0, "[target] unknown kind '" + kind + "'");
}

HoloMap parse_map(SectionReader& sec) {
    const std::string variant = sec.get_string("variant");
    if (variant == "identity") return HoloMap::identity();
    if (variant == "rotation_scale") {
        const double modulus = sec.get_number_or("modulus", 1.0);
        const double phase = sec.get_number_or("phase", 0.0);
        return HoloMap::rotation_scale(std::polar(modulus, phase));
    }
    if (variant == "power") {
        const double n = sec.get_number("n");
        if (n < 1.0 || n != std::floor(n))
            throw ScenarioParseError(0, "[map] power exponent must be an integer >= 1");
        return HoloMap::power(static_cast<int>(n));
    }
    if (variant == "blaschke") {
        return HoloMap::blaschke(Complex(sec.get_number_or("a_re", 0.0),
                                         sec.get_number_or("a_im", 0.0)));
    }
    if (variant == "moebius") {
        return HoloMap::moebius_disk(Complex(sec.get_number_or("a_re", 0.0),
                                             sec.get_number_or("a_im", 0.0)),
                                     sec.get_number_or("alpha", 0.0));
    }
    if (variant == "polynomial") {
        const auto re = sec.get_number_list_or("coeffs", {});
        if (re.empty())
            throw ScenarioParseError(0, "[map] polynomial needs 'coeffs'");
        const auto im = sec.get_number_list_or(
            "coeffs_im", std::vector<double>(re.size(), 0.0));
        if (im.size() != re.size())
            throw ScenarioParseError(0, "[map] coeffs_im length mismatch");
        std::vector<Complex> c(re.size());
        for (size_t i = 0; i < re.size(); ++i) c[i] = Complex(re[i], im[i]);
        return HoloMap::polynomial(std::move(c));
    }
    throw ScenarioParseError(0, "[map] unknown variant '" + variant + "'");
}

}  // namespace

ParsedScenario parse_scenario_text(const std::string& text,
                                   const std::string& origin) {
    Document doc = tokenize(text);
    for (const auto& [name, line] : doc.section_lines) {
        if (name != "domain" && name != "target" && name != "map" &&
            name != "mode" && name != "grid" && name != "tolerances")
            throw ScenarioParseError(line, "unknown section [" + name + "]");
    }

    ParsedScenario out;
    out.scenario.name = origin;

    SectionReader dom(doc, "domain", true);
    out.scenario.domain = parse_domain(dom, &out.scenario.domain_radius_in_use);
    dom.reject_unknown();

    SectionReader tgt(doc, "target", true);
    out.scenario.target = parse_target(tgt, &out.scenario.rho2);
    tgt.reject_unknown();

    SectionReader map(doc, "map", true);
    out.scenario.map = parse_map(map);
    map.reject_unknown();

    SectionReader mode(doc, "mode", true);
    out.mode = mode_from_string(mode.get_string("mode"));
    if (out.mode == Mode::ahlfors_limit) {
        out.scenario.z2 = Complex(mode.get_number_or("z2_re", 0.5),
                                  mode.get_number_or("z2_im", 0.0));
        out.scenario.r0_sequence =
            mode.get_number_list_or("r0", {0.9, 0.99, 0.999});
    }
    mode.reject_unknown();

    SectionReader grid(doc, "grid", false);
    if (grid.present()) {
        out.scenario.grid.n_radial =
            static_cast<int>(grid.get_number_or("n_radial", 64));
        out.scenario.grid.n_angular =
            static_cast<int>(grid.get_number_or("n_angular", 128));
        grid.reject_unknown();
    }

    SectionReader tol(doc, "tolerances", false);
    if (tol.present()) {
        out.scenario.tol.ineq_slack =
            require_positive(tol.get_number_or("ineq", 1e-8), "[tolerances] ineq");
        out.scenario.tol.subharmonic_slack = require_positive(
            tol.get_number_or("subharmonic", 1e-4), "[tolerances] subharmonic");
        out.scenario.tol.integration_tol = require_positive(
            tol.get_number_or("integration", 1e-10), "[tolerances] integration");
        tol.reject_unknown();
    }

    try {
        out.scenario.finalize();
    } catch (const std::invalid_argument& e) {
        throw ScenarioParseError(0, e.what());
    }
    return out;
}

ParsedScenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario_text(ss.str(), path);
}

}  // namespace shrink
