#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace mcav {

/// Invalid or inconsistent configuration (maps to exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-finite values or numeric divergence (maps to exit code 3).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Misuse of a stateful protocol, e.g. acting for a crashed vehicle.
struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Corrupt or mismatched artifact such as a checkpoint (maps to exit code 4).
struct ArtifactError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
    bool operator==(const Vec2&) const = default;
};

inline double sq(double v) { return v * v; }

/// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a + M_PI, 2.0 * M_PI);
    if (a < 0) a += 2.0 * M_PI;
    return a - M_PI;
}

inline void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw NumericError(std::string("non-finite value in ") + what);
}

/// splitmix64; used to derive independent seed streams from one run seed.
inline uint64_t mix_seed(uint64_t seed, uint64_t salt) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Deterministic RNG. Distribution helpers are implemented by hand so the
/// stream is identical across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    uint64_t uniform_int(uint64_t n) {
        // Rejection sampling keeps the draw unbiased.
        const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
        uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    /// Box-Muller normal draw.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    /// Sample an index from a discrete distribution given cumulative weights.
    int categorical(const double* probs, int n) {
        double r = uniform();
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            acc += probs[i];
            if (r < acc) return i;
        }
        return n - 1;
    }

private:
    std::mt19937_64 engine_;
};

/// FNV-1a 64-bit hash; used for config and layer-spec digests.
inline uint64_t fnv1a64(const void* data, size_t len, uint64_t h = 0xCBF29CE484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001B3ull;
    }
    return h;
}

inline uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

}  // namespace mcav
