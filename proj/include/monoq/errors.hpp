#pragma once

#include <stdexcept>
#include <string>

namespace monoq {

/// Evaluation requested inside the excluded ball around the monopole site.
struct SingularPoint : std::domain_error {
    explicit SingularPoint(const std::string& what) : std::domain_error(what) {}
};

/// Translation whose endpoint is anti-parallel to the base point; the
/// transport axis is undefined there.
struct AntipodalTranslation : std::domain_error {
    explicit AntipodalTranslation(const std::string& what) : std::domain_error(what) {}
};

/// Spherical triangle with two (nearly) parallel vertices.
struct DegenerateTriangle : std::domain_error {
    explicit DegenerateTriangle(const std::string& what) : std::domain_error(what) {}
};

/// Quantity too close to a removable singularity for a trustworthy result.
struct IllConditioned : std::domain_error {
    explicit IllConditioned(const std::string& what) : std::domain_error(what) {}
};

/// Momentum below the chart cutoff p_min.
struct MomentumTooSmall : std::domain_error {
    explicit MomentumTooSmall(const std::string& what) : std::domain_error(what) {}
};

/// Point does not lie on the massless orbit within tolerance.
struct OffOrbit : std::domain_error {
    explicit OffOrbit(const std::string& what) : std::domain_error(what) {}
};

/// Derived structure-constant table failed an exactness screen.
struct InconsistentTable : std::runtime_error {
    explicit InconsistentTable(const std::string& what) : std::runtime_error(what) {}
};

/// Too many samples were rejected for the result to be meaningful.
struct InsufficientSamples : std::runtime_error {
    explicit InsufficientSamples(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid run configuration (bad tolerances, unknown suite, ...).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Report emission failed (unwritable path, ...).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace monoq
