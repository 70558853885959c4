// Acceptance gate: runs the full default verification (seed 42, 10^4 samples
// per check) and holds the results against fixed thresholds, independent of
// the tolerance knobs the suites happen to run with. One line per criterion.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "monoq/monoq.hpp"

#ifndef VERIFY_BIN
#error "VERIFY_BIN must point at the verification CLI"
#endif

namespace {

using monoq::CheckResult;
using monoq::VerificationReport;

const CheckResult* find_check(const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

struct Gate {
    const VerificationReport& report;
    std::vector<std::string> problems;

    bool require(const std::string& name, double tol, std::size_t min_used) {
        const CheckResult* c = find_check(report, name);
        if (!c) {
            problems.push_back(name + ": missing from the report");
            return false;
        }
        bool ok = true;
        if (!c->passed) {
            problems.push_back(name + ": failed its own gate");
            ok = false;
        }
        if (c->max_abs_err > tol) {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%s: max_abs_err %.3e above pinned %.1e",
                          name.c_str(), c->max_abs_err, tol);
            problems.push_back(buf);
            ok = false;
        }
        if (c->samples_used < min_used) {
            problems.push_back(name + ": too few usable samples");
            ok = false;
        }
        return ok;
    }
};

bool report_criterion(int n, const char* label, const Gate& gate, int& failures) {
    if (gate.problems.empty()) {
        std::printf("criterion %d: pass  %s\n", n, label);
        return true;
    }
    std::printf("criterion %d: FAIL  %s\n", n, label);
    for (const auto& p : gate.problems) std::printf("    %s\n", p.c_str());
    ++failures;
    return false;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(VERIFY_BIN) + " " + args;
    const int status = std::system(cmd.c_str());
    if (status < 0) return -1;
#ifdef WEXITSTATUS
    return WEXITSTATUS(status);
#else
    return status >> 8;
#endif
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main() {
    monoq::SuiteConfig cfg;  // defaults: seed 42, 10^4 samples, full suite set
    VerificationReport report;
    try {
        report = monoq::run_verification(cfg);
    } catch (const std::exception& e) {
        std::printf("acceptance aborted: %s\n", e.what());
        return 9;
    }

    // The sampled checks may skip ill-conditioned draws, but the bulk of the
    // default budget has to survive for the statements below to mean much.
    const std::size_t bulk = cfg.samples / 2;
    int failures = 0;

    {
        Gate g{report, {}};
        g.require("ej.cocycle_identity", 1e-12, bulk);
        g.require("ej.cocycle_unit_norm", 1e-12, bulk);
        g.require("ej.cocycle_inverse_conjugate", 1e-12, bulk);
        g.require("ej.cocycle_ray_additivity", 1e-12, bulk);
        report_criterion(1, "transport cocycle: identity, unit norm, inverse, ray additivity"
                            " within 1e-12", g, failures);
    }
    {
        Gate g{report, {}};
        g.require("ej.translation_composition", 1e-12, bulk);
        g.require("ej.translation_associativity", 1e-12, bulk);
        g.require("ej.multiplier_inverse_pair", 1e-12, bulk);
        report_criterion(2, "twisted translations compose through the multiplier;"
                            " associativity within 1e-12", g, failures);
    }
    {
        Gate g{report, {}};
        g.require("ej.geometric_phase_ratio", 1e-6, 1000);
        const CheckResult* c = find_check(report, "ej.geometric_phase_ratio");
        const bool ok = report_criterion(
            3, "multiplier phase / solid angle constant, equal to 1/2 within 1e-6", g, failures);
        if (ok && c) std::printf("    sign: +1/2 (%s)\n", c->convention_notes.c_str());
    }
    {
        Gate g{report, {}};
        g.require("ej.gccr_canonical_pairs", 1e-8, bulk);
        g.require("ej.position_commutant", 1e-12, bulk);
        g.require("ej.curvature_closed_form", 1e-8, bulk);
        g.require("ej.gccr_momentum_pair", 1e-8, bulk);
        g.require("ej.nabla_j_commutant", 1e-8, bulk);
        g.require("ej.angular_momentum_j_commutant", 1e-8, bulk);
        g.require("ej.axis_involution_unitary", 1e-12, bulk);
        report_criterion(4, "canonical pairs, curvature, momentum commutator, axis involution",
                         g, failures);
    }
    {
        Gate g{report, {}};
        g.require("weyl.defect_translation_sector", 1e-12, bulk);
        g.require("weyl.defect_position_sector", 1e-12, bulk);
        g.require("weyl.defect_unit_norm", 1e-10, bulk);
        g.require("weyl.defect_mixed_sector", 1e-10, bulk);
        report_criterion(5, "displacement composition defects match the frozen ordering",
                         g, failures);
    }
    {
        Gate g{report, {}};
        g.require("orbit.casimir_word_invariance", 1e-10, 1000);
        g.require("orbit.pauli_lubanski_covariance", 1e-10, bulk);
        g.require("orbit.structure_table_jacobi", 1e-10, 1);
        g.require("orbit.structure_fd_regeneration", 1e-8, 1);
        report_criterion(6, "coadjoint invariants and the derived structure table", g, failures);
    }
    {
        Gate g{report, {}};
        g.require("orbit.chart_roundtrip", 1e-12, bulk);
        g.require("orbit.bracket_canonical_pairs", 1e-8, bulk);
        g.require("orbit.bracket_position_pair", 1e-8, bulk);
        g.require("orbit.symplectic_bivector_inverse", 1e-8, bulk);
        g.require("orbit.chart_translation_action", 1e-10, bulk);
        g.require("orbit.monopole_duality", 1e-10, bulk);
        report_criterion(7, "orbit chart: roundtrip, brackets, symplectic inverse, duality",
                         g, failures);
    }
    {
        Gate g{report, {}};
        const int rc1 = run_cli("--json acceptance_run1.json > acceptance_run1.log");
        const int rc2 = run_cli("--json acceptance_run2.json > acceptance_run2.log");
        if (rc1 != 0 || rc2 != 0) g.problems.push_back("default CLI run did not exit 0");
        const std::string j1 = slurp("acceptance_run1.json");
        const std::string j2 = slurp("acceptance_run2.json");
        for (const char* leftover : {"acceptance_run1.json", "acceptance_run2.json",
                                     "acceptance_run1.log", "acceptance_run2.log"})
            std::remove(leftover);
        if (j1.empty() || j1 != j2)
            g.problems.push_back("repeated default runs produced different JSON bytes");
        if (run_cli("--suites quat --samples 64 --tol-exact 1e-300 > /dev/null") != 1)
            g.problems.push_back("failing run did not exit 1");
        if (run_cli("--rmin -1 2> /dev/null") != 2)
            g.problems.push_back("invalid config did not exit 2");
        if (run_cli("--suites bogus 2> /dev/null") != 2)
            g.problems.push_back("unknown suite did not exit 2");
        report_criterion(8, "CLI determinism: byte-identical reports, exit discipline",
                         g, failures);
    }

    std::printf("%s: %d of 8 criteria failed\n", failures == 0 ? "PASS" : "FAIL", failures);
    return failures == 0 ? 0 : 1;
}
