#include "sgt/random.hpp"

namespace sgt {

std::uint64_t Rng::below(std::uint64_t bound) noexcept {
    // Lemire's nearly-divisionless method.
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<unsigned __int128>(next()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

BigInt Rng::big_between_one_and(const BigInt& bound) {
    if (bound <= 1) {
        return 1;
    }
    const BigInt range = bound;  // draw r in [0, bound) and return r + 1
    const unsigned bits = bit_length(range);
    for (;;) {
        BigInt r = 0;
        unsigned have = 0;
        while (have < bits) {
            r <<= 64;
            r += next();
            have += 64;
        }
        r >>= (have - bits);
        if (r < range) {
            return r + 1;
        }
    }
}

}  // namespace sgt
