#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "monoq/monoq.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of the monopole translation kinematics and the "
                 "massless coadjoint-orbit calculus"};
    monoq::SuiteConfig cfg;
    std::string json_path;
    std::string csv_path;
    std::vector<std::string> suites = cfg.suites;

    app.add_option("--suites", suites, "Subset of quat,ej,weyl,orbit (comma separated)")
        ->delimiter(',');
    app.add_option("--seed", cfg.seed, "Sample stream seed");
    app.add_option("--samples", cfg.samples, "Samples per randomized check");
    app.add_option("--tol-exact", cfg.tol_exact, "Tolerance for closed-form identities");
    app.add_option("--tol-fd", cfg.tol_fd, "Tolerance for finite-difference checks");
    app.add_option("--fd-step", cfg.fd_step, "Finite-difference step");
    app.add_option("--rmin", cfg.r_min, "Exclusion radius around the field singularity");
    app.add_option("--box", cfg.box, "Half-width of the sampling box");
    app.add_option("--json", json_path, "Write the report to this path as JSON");
    app.add_option("--csv", csv_path, "Write the report to this path as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    cfg.suites = suites;

    try {
        cfg.validate();
        const monoq::VerificationReport report = monoq::run_verification(cfg);

        std::size_t failed = 0;
        for (const auto& c : monoq::detail::sorted_checks(report)) {
            if (!c.passed) ++failed;
            std::printf("%-36s %s  max_err %9.3e  tol %7.1e  used %llu  skipped %llu\n",
                        c.name.c_str(), c.passed ? "pass" : "FAIL", c.max_abs_err, c.tolerance,
                        static_cast<unsigned long long>(c.samples_used),
                        static_cast<unsigned long long>(c.samples_skipped));
            if (!c.convention_notes.empty())
                std::printf("    note: %s\n", c.convention_notes.c_str());
        }
        std::printf("%zu checks, %zu failed, %.2f s\n", report.checks.size(), failed,
                    report.wall_seconds);

        if (!json_path.empty()) monoq::emit_json(report, json_path);
        if (!csv_path.empty()) monoq::emit_csv(report, csv_path);
        return report.all_pass() ? 0 : 1;
    } catch (const monoq::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const monoq::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
