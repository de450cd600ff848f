#pragma once

#include <cmath>
#include <cstdint>

namespace sng::rng {

// SplitMix64 finalizer. Full-period bijective mixer over 64-bit integers.
constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

// Counter-based generator: output i of a stream is mix(key + i*gamma).
// Streams are keyed by (seed, stream_id), so the numbers a given vertex,
// point, or trial sees depend only on those two values and never on which
// thread produced them or in what order streams were consumed.
class Stream {
public:
    Stream(std::uint64_t seed, std::uint64_t stream_id)
        : key_(mix(seed + kGamma) ^ mix(stream_id * 0xda942042e4dd58b5ULL + 0x8bb84b93962eacc9ULL)) {}

    std::uint64_t next() { return mix(key_ + (++counter_) * kGamma); }

    // Uniform double in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform double in (0, 1); safe as a log() argument.
    double next_unit_open() { return (static_cast<double>(next() >> 12) + 0.5) * 0x1.0p-52; }

    // Uniform integer in [0, bound). Lemire multiply-reject, no modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t x = next();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                x = next();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    bool next_bernoulli(double p) { return next_unit() < p; }

    // Standard normal via Box-Muller; the second value is cached.
    double next_gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u = next_unit_open();
        const double v = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double theta = 6.283185307179586476925286766559 * v;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

inline Stream substream(std::uint64_t seed, std::uint64_t stream_id) { return Stream(seed, stream_id); }

}  // namespace sng::rng
