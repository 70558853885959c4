#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

#include "monoq/errors.hpp"
#include "monoq/probe.hpp"
#include "monoq/vec3.hpp"

namespace monoq {

/// FNV-1a hash of a check name, used to decorrelate RNG streams.
inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Counter-based generator: every draw is a pure function of
/// (seed, stream, counter), so per-check streams are order-independent and
/// identical across platforms.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::string_view stream, std::uint64_t index)
        : state_(splitmix64(seed ^ splitmix64(fnv1a(stream) + 0x632be59bd9b4e019ull * index))) {}

    std::uint64_t next_u64() {
        state_ = splitmix64(state_);
        return state_;
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [-1, 1).
    double symmetric() { return 2.0 * uniform() - 1.0; }

    Vec3 in_box(double half_width) {
        return {half_width * symmetric(), half_width * symmetric(), half_width * symmetric()};
    }

    Vec3 unit_vector() {
        for (int attempt = 0; attempt < 256; ++attempt) {
            const Vec3 v = in_box(1.0);
            const double n2 = norm_sq(v);
            if (n2 > 1e-4 && n2 <= 1.0) return v / std::sqrt(n2);
        }
        throw InsufficientSamples("unit_vector: rejection sampling failed");
    }

private:
    std::uint64_t state_;
};

/// Rejection-sampled draws satisfying the domain constraints of the
/// kinematics (away from the origin, translation pairs away from the
/// antipodal cone).
struct SampleDomain {
    double r_min = 0.1;
    double box = 3.0;
    double eps_cone = 1e-3;
    std::uint64_t seed = 42;

    CounterRng rng(std::string_view stream, std::uint64_t index) const {
        return CounterRng(seed, stream, index);
    }

    /// x with r_min < |x|, components in [-box, box).
    Vec3 point(CounterRng& rng) const {
        for (int attempt = 0; attempt < 1024; ++attempt) {
            const Vec3 x = rng.in_box(box);
            if (norm(x) > r_min * (1.0 + 1e-9)) return x;
        }
        throw InsufficientSamples("point: rejection sampling failed");
    }

    /// (x, a) with x, x+a, and the whole segment described by the pair away
    /// from the origin, and x, x+a outside the antipodal cone by a margin.
    struct Pair {
        Vec3 x;
        Vec3 a;
    };

    Pair translation_pair(CounterRng& rng) const {
        for (int attempt = 0; attempt < 4096; ++attempt) {
            const Vec3 x = rng.in_box(box);
            const Vec3 a = rng.in_box(box);
            const Vec3 y = x + a;
            const double nx = norm(x), ny = norm(y);
            if (nx <= r_min || ny <= r_min) continue;
            const double d = dot(x, y);
            const double cn = norm(cross(x, y));
            if (d < 0.0 && cn < 4.0 * eps_cone * nx * ny) continue;
            return {x, a};
        }
        throw InsufficientSamples("translation_pair: rejection sampling failed");
    }

    /// Smooth localized probe with O(1) amplitudes, centered inside the box.
    ProbeFunction probe(CounterRng& rng) const {
        const Vec3 center = rng.in_box(0.5 * box);
        const double width = 1.5 + 1.5 * rng.uniform();
        const Quaternion q0{rng.symmetric(), {rng.symmetric(), rng.symmetric(), rng.symmetric()}};
        std::array<Quaternion, 3> q1;
        for (auto& q : q1)
            q = Quaternion{rng.symmetric(), {rng.symmetric(), rng.symmetric(), rng.symmetric()}};
        return ProbeFunction(center, width, q0, q1);
    }
};

}  // namespace monoq
