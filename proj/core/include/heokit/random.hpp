#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace heokit {

/// Seedable pseudo-random stream used by every optimizer.
///
/// The generator is xoshiro256** (Blackman & Vigna) with its 256-bit state
/// expanded from the 64-bit seed through SplitMix64. Uniform reals take the
/// top 53 bits of a draw; normal variates use the Box-Muller pair transform
/// and cache the second variate of each pair. None of this depends on the
/// standard library's distribution classes, so a seed reproduces the same
/// sequence on every platform.
///
/// A stream has a single owner; never share one between threads.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed = 0) noexcept;

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() noexcept;

    /// Uniform in [0, 1).
    double uniform01() noexcept;

    /// Uniform in [lo, hi); returns lo when lo == hi.
    double uniform(double lo, double hi) noexcept;

    /// Normal(mu, sigma). sigma == 0 returns mu exactly.
    double normal(double mu, double sigma) noexcept;

    /// Uniform integer in [0, n). n must be positive.
    std::size_t below(std::size_t n) noexcept;

    bool coin() noexcept { return (next_u64() >> 63) != 0; }

private:
    std::array<std::uint64_t, 4> state_{};
    std::uint64_t seed_ = 0;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace heokit
