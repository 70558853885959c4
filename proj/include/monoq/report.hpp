#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "monoq/errors.hpp"

namespace monoq {

/// Aggregate outcome of one named identity check.
struct CheckResult {
    std::string name;
    std::string suite;
    std::uint64_t samples_used = 0;
    std::uint64_t samples_skipped = 0;
    double max_abs_err = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string convention_notes;
};

inline const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> s{"quat", "ej", "weyl", "orbit"};
    return s;
}

struct SuiteConfig {
    std::uint64_t seed = 42;
    std::uint64_t samples = 10000;
    double tol_exact = 1e-12;
    double tol_fd = 1e-6;
    double fd_step = 1e-4;
    double r_min = 0.1;
    double box = 3.0;
    double eps_cone = 1e-3;
    std::vector<std::string> suites = known_suites();

    void validate() const {
        if (samples < 1) throw ConfigError("samples must be >= 1");
        if (!(tol_exact > 0.0)) throw ConfigError("tol-exact must be positive");
        if (!(tol_fd > 0.0)) throw ConfigError("tol-fd must be positive");
        if (!(fd_step > 0.0)) throw ConfigError("fd-step must be positive");
        if (!(r_min > 0.0)) throw ConfigError("rmin must be positive");
        if (fd_step >= r_min) throw ConfigError("fd-step must be smaller than rmin");
        if (!(box > r_min)) throw ConfigError("box must exceed rmin");
        if (suites.empty()) throw ConfigError("no suites selected");
        for (const auto& s : suites)
            if (std::find(known_suites().begin(), known_suites().end(), s) ==
                known_suites().end())
                throw ConfigError("unknown suite: " + s);
    }

    bool wants(const std::string& suite) const {
        return std::find(suites.begin(), suites.end(), suite) != suites.end();
    }
};

struct VerificationReport {
    SuiteConfig config;
    std::vector<CheckResult> checks;
    double wall_seconds = 0.0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return !checks.empty();
    }
};

namespace detail {

/// Fixed float rendering: %.17g round-trips doubles and is stable across
/// runs, which keeps report files byte-identical for identical inputs.
inline std::string render_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

inline std::vector<CheckResult> sorted_checks(const VerificationReport& report) {
    std::vector<CheckResult> checks = report.checks;
    std::sort(checks.begin(), checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return checks;
}

}  // namespace detail

/// JSON rendering of a report. Checks are sorted by name and wall-clock time
/// is deliberately omitted so identical configurations produce identical
/// bytes.
inline std::string to_json_string(const VerificationReport& report) {
    using detail::json_escape;
    using detail::render_double;
    const auto checks = detail::sorted_checks(report);
    std::string out = "{\n  \"config\": {\n";
    out += "    \"seed\": " + std::to_string(report.config.seed) + ",\n";
    out += "    \"samples\": " + std::to_string(report.config.samples) + ",\n";
    out += "    \"tol_exact\": " + render_double(report.config.tol_exact) + ",\n";
    out += "    \"tol_fd\": " + render_double(report.config.tol_fd) + ",\n";
    out += "    \"fd_step\": " + render_double(report.config.fd_step) + ",\n";
    out += "    \"r_min\": " + render_double(report.config.r_min) + ",\n";
    out += "    \"box\": " + render_double(report.config.box) + ",\n";
    out += "    \"suites\": [";
    for (std::size_t i = 0; i < report.config.suites.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + json_escape(report.config.suites[i]) + "\"";
    }
    out += "]\n  },\n  \"checks\": [\n";
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto& c = checks[i];
        out += "    {\"name\": \"" + json_escape(c.name) + "\", ";
        out += "\"suite\": \"" + json_escape(c.suite) + "\", ";
        out += "\"samples_used\": " + std::to_string(c.samples_used) + ", ";
        out += "\"samples_skipped\": " + std::to_string(c.samples_skipped) + ", ";
        out += "\"max_abs_err\": " + render_double(c.max_abs_err) + ", ";
        out += "\"tolerance\": " + render_double(c.tolerance) + ", ";
        out += std::string("\"pass\": ") + (c.passed ? "true" : "false");
        if (!c.convention_notes.empty())
            out += ", \"notes\": \"" + json_escape(c.convention_notes) + "\"";
        out += "}";
        if (i + 1 < checks.size()) out += ",";
        out += "\n";
    }
    out += "  ],\n";
    out += std::string("  \"all_pass\": ") + (report.all_pass() ? "true" : "false") + "\n}\n";
    return out;
}

/// CSV rendering: header plus one row per check, sorted by name.
inline std::string to_csv_string(const VerificationReport& report) {
    using detail::render_double;
    std::string out = "name,suite,samples_used,samples_skipped,max_abs_err,tolerance,pass\n";
    for (const auto& c : detail::sorted_checks(report)) {
        out += c.name + "," + c.suite + ",";
        out += std::to_string(c.samples_used) + "," + std::to_string(c.samples_skipped) + ",";
        out += render_double(c.max_abs_err) + "," + render_double(c.tolerance) + ",";
        out += c.passed ? "true" : "false";
        out += "\n";
    }
    return out;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << content;
    f.flush();
    if (!f) throw IoError("write failed: " + path);
}

inline void emit_json(const VerificationReport& report, const std::string& path) {
    write_file(path, to_json_string(report));
}

inline void emit_csv(const VerificationReport& report, const std::string& path) {
    write_file(path, to_csv_string(report));
}

}  // namespace monoq
