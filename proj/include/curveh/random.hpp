#pragma once

// Seeded sampling with a fixed integer mapping, so that a seed reproduces the
// same draws with any standard library.

#include <cstdint>
#include <random>
#include <stdexcept>

namespace curveh {

/// splitmix64 step; used to derive independent per-trial seeds.
constexpr std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index)
{
    std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        if (lo > hi) throw std::invalid_argument("empty sampling range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(engine_());
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return lo + static_cast<std::int64_t>(r % span);
    }

    /// Uniform nonzero integer in [-box, box].
    std::int64_t nonzero(std::int64_t box)
    {
        std::int64_t v = uniform(-box, box - 1);
        return v >= 0 ? v + 1 : v;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace curveh
