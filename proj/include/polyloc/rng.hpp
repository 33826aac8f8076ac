#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <cmath>

namespace polyloc {

/// Counter-based generator: the i-th draw of stream (seed, stream) is a pure
/// function of (seed, stream, i). Output is a SplitMix64 finalizer applied to
/// a Weyl sequence keyed by the seed and stream.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

    std::uint64_t next() noexcept { return mix(key_ + kGolden * ++counter_); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1].
    double uniform_open_low() noexcept { return 1.0 - uniform(); }

    /// Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x = next();
        while (x >= limit) {
            x = next();
        }
        return x % bound;
    }

    /// Standard normal via Box-Muller (one value per call pair is discarded).
    double normal() noexcept {
        const double u = uniform_open_low();
        const double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
    }

    /// Standard exponential.
    double exponential() noexcept { return -std::log(uniform_open_low()); }

    /// Uniform point in the closed disc of the given radius.
    std::complex<double> in_disc(double radius) noexcept {
        const double rho = radius * std::sqrt(uniform());
        const double theta = 2.0 * std::numbers::pi * uniform();
        return std::polar(rho, theta);
    }

    std::uint64_t counter() const noexcept { return counter_; }

private:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace polyloc
