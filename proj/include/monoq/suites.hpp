#pragma once

#include <chrono>

#include "monoq/report.hpp"
#include "monoq/suites_common.hpp"
#include "monoq/suites_orbit.hpp"
#include "monoq/suites_quat.hpp"
#include "monoq/suites_translation.hpp"
#include "monoq/suites_weyl.hpp"

namespace monoq {

/// Runs the selected verification suites. Deterministic for a fixed config:
/// every sample stream is a pure function of (seed, check name, index).
inline VerificationReport run_verification(const SuiteConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport report;
    report.config = cfg;
    CheckHarness h(cfg, report.checks);
    if (cfg.wants("quat")) run_quat_suite(h);
    if (cfg.wants("ej")) run_translation_suite(h);
    if (cfg.wants("weyl")) run_weyl_suite(h);
    if (cfg.wants("orbit")) run_orbit_suite(h);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace monoq
