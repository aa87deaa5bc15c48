#include "sgt/counters.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sgt/random.hpp"

namespace sgt {

namespace modarith {

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) noexcept {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) {
            result = mul(result, base, p);
        }
        base = mul(base, base, p);
        exp >>= 1;
    }
    return result;
}

}  // namespace modarith

bool is_probable_prime(std::uint64_t n, std::uint64_t seed, int rounds) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) {
            return n == small;
        }
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    Rng rng(seed);
    for (int round = 0; round < rounds; ++round) {
        const std::uint64_t a = rng.between(2, n - 2);
        std::uint64_t x = modarith::pow(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = modarith::mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

namespace {

bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
    a %= n;
    if (a == 0) {
        return true;
    }
    std::uint64_t x = modarith::pow(a, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (unsigned r = 1; r < s; ++r) {
        x = modarith::mul(x, x, n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) {
            return n == small;
        }
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set has no strong pseudoprime below 2^64.
    for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        if (!strong_probable_prime(n, a, d, s)) {
            return false;
        }
    }
    return true;
}

std::uint64_t random_prime61(std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0x9e1));
    constexpr std::uint64_t lo = 1ULL << 60;
    for (;;) {
        const std::uint64_t candidate = lo | (rng.next() & (lo - 1)) | 1ULL;
        if (is_prime_u64(candidate)) {
            return candidate;
        }
    }
}

void CounterParams::validate() const {
    if (n < 1) {
        throw std::invalid_argument("counter context size n must be >= 1");
    }
    if (alpha < 1) {
        throw std::invalid_argument("alpha must be >= 1");
    }
}

double false_zero_bound(const CounterParams& params) {
    params.validate();
    const double prime_factors = std::max(1.0, static_cast<double>(bit_length(params.alpha)));
    return static_cast<double>(params.n) * prime_factors / std::ldexp(1.0, 54);
}

DecisionCounter::DecisionCounter(std::uint64_t seed) : seed_(seed), prime_(random_prime61(seed)) {}

void DecisionCounter::merge(const DecisionCounter& other) {
    if (other.prime_ != prime_) {
        throw std::invalid_argument("cannot merge decision counters over different primes");
    }
    residue_ = modarith::add(residue_, other.residue_, prime_);
}

DecisionCounter counter_ingest(const CounterParams& params, std::uint64_t seed,
                               std::span<const BigInt> deltas) {
    params.validate();
    DecisionCounter c(seed);
    for (const auto& d : deltas) {
        c.add(d);
    }
    return c;
}

DecisionCounter counter_merge(const DecisionCounter& a, const DecisionCounter& b) {
    DecisionCounter out = a;
    out.merge(b);
    return out;
}

std::uint64_t count_distinct(const Stream& stream, const CounterParams& params,
                             std::uint64_t seed) {
    if (stream.header.model != StreamModel::Element) {
        throw std::invalid_argument("count_distinct needs an element-model stream");
    }
    params.validate();
    std::vector<DecisionCounter> detectors;
    detectors.reserve(stream.header.universe);
    for (std::uint64_t i = 0; i < stream.header.universe; ++i) {
        detectors.emplace_back(derive_seed(seed, 0xd157, i));
    }
    for (const auto& t : stream.tokens) {
        detectors.at(t.element).add(t.delta);
    }
    std::uint64_t count = 0;
    for (const auto& c : detectors) {
        count += c.is_zero() ? 0 : 1;
    }
    return count;
}

}  // namespace sgt
