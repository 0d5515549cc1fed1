#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace adpt {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Stateless-keyed stream: the same key always yields the same sequence, so
/// draws for (seed, frame, identity) do not depend on generation order.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0, std::uint64_t c = 0) noexcept
        : key_(mix64(mix64(mix64(mix64(seed) ^ a) ^ b) ^ c)) {}

    std::uint64_t next_u64() noexcept { return mix64(key_ ^ mix64(counter_++)); }

    /// Uniform in [0, 1).
    double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (one value per call).
    double normal() noexcept {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    bool bernoulli(double p) noexcept { return uniform() < p; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace adpt
