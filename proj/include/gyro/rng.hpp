#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace gyro {

/// Deterministic sample stream. Uniform doubles are produced from the raw
/// engine output so identical seeds give identical streams on every build.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in (-1, 1).
    double symmetric() { return 2.0 * unit() - 1.0; }

    /// Stable per-check seed: independent checks must not share a stream,
    /// or reordering them would silently change every sample.
    static std::uint64_t derive(std::uint64_t seed, std::string_view tag) {
        std::uint64_t h = 1469598103934665603ull; // FNV-1a
        for (unsigned char c : tag) {
            h ^= c;
            h *= 1099511628211ull;
        }
        std::uint64_t z = seed ^ h;
        z += 0x9e3779b97f4a7c15ull; // splitmix64 finalizer
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace gyro
