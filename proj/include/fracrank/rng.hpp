#pragma once

#include <array>
#include <cmath>
#include <cstdint>

// Seedable, platform-stable random number generation.
//
// The generator is xoshiro256++ (Blackman & Vigna), seeded through SplitMix64.
// Independent streams are derived by folding a stream index into the master
// seed with the SplitMix64 finalizer, so results are identical for any degree
// of parallelism: stream r of seed s is the same sequence no matter which
// thread draws it. Gaussian deviates come from the Box-Muller transform (the
// trigonometric form, no rejection), so the mapping from seed to sample path
// is fixed by this header rather than by the standard library.

namespace fracrank::rng {

namespace detail {
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace detail

struct SplitMix64 {
    std::uint64_t state;

    constexpr std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        return detail::splitmix64_mix(state);
    }
};

class Xoshiro256pp {
  public:
    explicit Xoshiro256pp(std::uint64_t seed) { seed_from(seed); }

    /// Stream `stream` of master seed `seed`; distinct streams are
    /// statistically independent sequences.
    Xoshiro256pp(std::uint64_t seed, std::uint64_t stream) {
        seed_from(detail::splitmix64_mix(seed) ^
                  detail::splitmix64_mix(stream + 0x9E3779B97F4A7C15ULL));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform on (0, 1]: 53-bit mantissa, never exactly zero.
    double next_unit() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    void seed_from(std::uint64_t z) {
        SplitMix64 sm{z};
        for (auto& w : s_) w = sm.next();
    }

    std::array<std::uint64_t, 4> s_{};
};

/// Standard normal deviates via Box-Muller; generates pairs, caches the spare.
class GaussianSampler {
  public:
    explicit GaussianSampler(std::uint64_t seed) : gen_(seed) {}
    GaussianSampler(std::uint64_t seed, std::uint64_t stream) : gen_(seed, stream) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = gen_.next_unit();
        const double u2 = gen_.next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

  private:
    Xoshiro256pp gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace fracrank::rng
