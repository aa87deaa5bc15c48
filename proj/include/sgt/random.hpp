#pragma once

#include <cstdint>

#include "sgt/bigint.hpp"

namespace sgt {

/// splitmix64 finalizer: a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Keyed pseudorandom function over up to four words. Every filter, partition
/// and sub-sampling decision in the library is a pure function of one of these.
constexpr std::uint64_t prf(std::uint64_t key, std::uint64_t a, std::uint64_t b = 0,
                            std::uint64_t c = 0, std::uint64_t d = 0) noexcept {
    std::uint64_t h = mix64(key ^ 0x6a09e667f3bcc909ULL);
    h = mix64(h ^ a);
    h = mix64(h ^ (b + 0x3c6ef372fe94f82bULL));
    h = mix64(h ^ (c + 0xa54ff53a5f1d36f1ULL));
    h = mix64(h ^ (d + 0x510e527fade682d1ULL));
    return h;
}

/// Derives an independent child seed from a parent seed and a domain label.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label,
                                    std::uint64_t index = 0) noexcept {
    return prf(seed, 0x5eedULL, label, index);
}

/// Small deterministic generator (splitmix64 stream). Bounded draws use
/// rejection so results do not depend on the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) noexcept;

    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) noexcept {
        return lo + below(hi - lo + 1);
    }

    /// Uniform in [0, 1).
    double unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) noexcept { return unit() < p; }

    /// Uniform in [1, bound]; bound >= 1.
    BigInt big_between_one_and(const BigInt& bound);

private:
    std::uint64_t state_;
};

}  // namespace sgt
