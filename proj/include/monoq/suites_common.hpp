#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monoq/quaternion.hpp"
#include "monoq/report.hpp"
#include "monoq/sampling.hpp"

namespace monoq {

/// Shared driver for the verification checks. A sampled check runs its body
/// once per sample index with a per-(check, index) random stream; the body
/// returns a deviation or nullopt to skip the sample, and domain errors
/// thrown by the body count as skips. A once check is deterministic.
/// Pass requires max_abs_err <= tolerance and skipped < used / 2.
class CheckHarness {
public:
    CheckHarness(const SuiteConfig& cfg, std::vector<CheckResult>& out)
        : cfg_(cfg), out_(out), dom_{cfg.r_min, cfg.box, cfg.eps_cone, cfg.seed} {}

    const SuiteConfig& config() const { return cfg_; }
    const SampleDomain& domain() const { return dom_; }

    template <typename F>
    void sampled(const std::string& suite, const std::string& name, double tol,
                 const std::string& notes, F&& body) {
        CheckResult r;
        r.name = name;
        r.suite = suite;
        r.tolerance = tol;
        r.convention_notes = notes;
        try {
            for (std::uint64_t i = 0; i < cfg_.samples; ++i) {
                CounterRng rng = dom_.rng(name, i);
                std::optional<double> dev;
                try {
                    dev = body(rng);
                } catch (const std::domain_error&) {
                    dev = std::nullopt;
                }
                if (!dev) {
                    ++r.samples_skipped;
                    continue;
                }
                ++r.samples_used;
                const double d =
                    std::isfinite(*dev) ? *dev : std::numeric_limits<double>::infinity();
                r.max_abs_err = std::max(r.max_abs_err, d);
            }
            r.passed = r.samples_used > 0 && r.max_abs_err <= r.tolerance &&
                       2 * r.samples_skipped < r.samples_used;
        } catch (const std::exception& e) {
            r.max_abs_err = std::numeric_limits<double>::infinity();
            r.passed = false;
            r.convention_notes += std::string(r.convention_notes.empty() ? "" : "; ") +
                                  "aborted: " + e.what();
        }
        out_.push_back(std::move(r));
    }

    template <typename F>
    void once(const std::string& suite, const std::string& name, double tol,
              const std::string& notes, F&& body) {
        CheckResult r;
        r.name = name;
        r.suite = suite;
        r.tolerance = tol;
        r.convention_notes = notes;
        r.samples_used = 1;
        try {
            const double d = body();
            r.max_abs_err = std::isfinite(d) ? d : std::numeric_limits<double>::infinity();
            r.passed = r.max_abs_err <= tol;
        } catch (const std::exception& e) {
            r.max_abs_err = std::numeric_limits<double>::infinity();
            r.passed = false;
            r.convention_notes += std::string(r.convention_notes.empty() ? "" : "; ") +
                                  "aborted: " + e.what();
        }
        out_.push_back(std::move(r));
    }

private:
    const SuiteConfig& cfg_;
    std::vector<CheckResult>& out_;
    SampleDomain dom_;
};

inline Quaternion random_quaternion(CounterRng& rng) {
    return {rng.symmetric(), {rng.symmetric(), rng.symmetric(), rng.symmetric()}};
}

inline UnitQuaternion random_unit_quaternion(CounterRng& rng) {
    return UnitQuaternion(random_quaternion(rng));
}

}  // namespace monoq
