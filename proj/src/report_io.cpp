#include "shrink/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace shrink {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double parse_double(const std::string& s, const std::string& key) {
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("report: bad numeric value for '" + key + "': " + s);
    }
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
        out << content;
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

std::string format_report(const Report& report) {
    std::ostringstream out;
    out << "shrinkcheck report v1\n";
    out << "scenario = " << report.scenario_name << "\n";
    out << "mode = " << to_string(report.mode) << "\n";
    out << "verdict = " << to_string(report.verdict) << "\n";
    for (const auto& h : report.hypotheses) {
        out << "hypothesis." << h.name << " = " << (h.passed ? "pass" : "fail")
            << " " << fmt(h.magnitude) << "\n";
    }
    out << "n_points = " << report.n_points << "\n";
    if (report.n_points > 0) {
        out << "margin.min = " << fmt(report.min_margin) << "\n";
        out << "margin.max = " << fmt(report.max_margin) << "\n";
        out << "margin.mean = " << fmt(report.mean_margin) << "\n";
    }
    for (const auto& [key, value] : report.scalars)
        out << "scalar." << key << " = " << fmt(value) << "\n";
    return out.str();
}

Report parse_report_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || trim(line) != "shrinkcheck report v1")
        throw std::runtime_error("report: missing header line");
    Report r;
    bool have_points = false;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("report: expected key = value: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "scenario") {
            r.scenario_name = value;
        } else if (key == "mode") {
            r.mode = mode_from_string(value);
        } else if (key == "verdict") {
            if (value == "PASS") r.verdict = Verdict::pass;
            else if (value == "FAIL") r.verdict = Verdict::fail;
            else if (value == "HYPOTHESIS_VIOLATED") r.verdict = Verdict::hypothesis_violated;
            else throw std::runtime_error("report: unknown verdict: " + value);
        } else if (key.rfind("hypothesis.", 0) == 0) {
            HypothesisCheck h;
            h.name = key.substr(11);
            std::istringstream vs(value);
            std::string status, mag;
            vs >> status >> mag;
            if (status != "pass" && status != "fail")
                throw std::runtime_error("report: bad hypothesis status: " + value);
            h.passed = status == "pass";
            h.magnitude = parse_double(mag, key);
            r.hypotheses.push_back(std::move(h));
        } else if (key == "n_points") {
            r.n_points = static_cast<int>(parse_double(value, key));
            have_points = r.n_points > 0;
        } else if (key == "margin.min") {
            r.min_margin = parse_double(value, key);
        } else if (key == "margin.max") {
            r.max_margin = parse_double(value, key);
        } else if (key == "margin.mean") {
            r.mean_margin = parse_double(value, key);
        } else if (key.rfind("scalar.", 0) == 0) {
            r.scalars.emplace_back(key.substr(7), parse_double(value, key));
        } else {
            throw std::runtime_error("report: unknown key: " + key);
        }
    }
    (void)have_points;
    return r;
}

Report parse_report_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open report file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_report_text(ss.str());
}

void write_report_file(const Report& report, const std::string& path) {
    atomic_write(path, format_report(report));
}

void write_plot_data(const Report& report, const std::string& path) {
    std::ostringstream out;
    out << "r,theta,rho_hat,rho_f,margin,u,lap_u\n";
    for (const auto& p : report.points) {
        out << fmt(p.r) << ',' << fmt(p.theta) << ',' << fmt(p.rho_hat) << ','
            << fmt(p.rho_image) << ',' << fmt(p.margin) << ','
            << (std::isnan(p.u) ? "nan" : fmt(p.u)) << ','
            << (std::isnan(p.lap_u) ? "nan" : fmt(p.lap_u)) << '\n';
    }
    atomic_write(path, out.str());
}

void print_summary(const Report& report, std::ostream& os) {
    os << report.scenario_name << " [" << to_string(report.mode)
       << "]: " << to_string(report.verdict) << "\n";
    for (const auto& h : report.hypotheses) {
        os << "  hypothesis " << h.name << ": " << (h.passed ? "ok" : "VIOLATED");
        if (!h.passed) {
            os << " (magnitude " << fmt(h.magnitude) << ")";
            if (!h.detail.empty()) os << " -- " << h.detail;
        }
        os << "\n";
    }
    if (report.n_points > 0) {
        os << "  grid points: " << report.n_points << ", margin min/max/mean: "
           << fmt(report.min_margin) << " / " << fmt(report.max_margin) << " / "
           << fmt(report.mean_margin) << "\n";
    }
    for (const auto& [key, value] : report.scalars)
        os << "  " << key << " = " << fmt(value) << "\n";
}

int exit_code_for(Verdict v) {
    switch (v) {
        case Verdict::pass: return 0;
        case Verdict::fail: return 2;
        case Verdict::hypothesis_violated: return 3;
    }
    return 2;
}

}  // namespace shrink
