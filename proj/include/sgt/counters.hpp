#pragma once

#include <cstdint>
#include <span>

#include "sgt/bigint.hpp"
#include "sgt/stream.hpp"

namespace sgt {

namespace modarith {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    const std::uint64_t s = a + b;  // a, b < p < 2^62, no overflow
    return s >= p ? s - p : s;
}

inline std::uint64_t neg(std::uint64_t a, std::uint64_t p) noexcept { return a ? p - a : 0; }

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) noexcept;

}  // namespace modarith

/// Miller-Rabin with `rounds` random bases drawn from `seed`.
bool is_probable_prime(std::uint64_t n, std::uint64_t seed, int rounds = 30);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Uniformly random prime in [2^60, 2^61), by rejection, derived from `seed`.
std::uint64_t random_prime61(std::uint64_t seed);

/// Error-budget context for decision counters.
struct CounterParams {
    std::uint64_t n = 1;
    BigInt alpha = 1;

    void validate() const;
};

/// Upper bound on the probability that one of `params.n` counters reports zero
/// for a non-zero value of magnitude <= alpha: n * log2(alpha) divided by the
/// number of 61-bit primes (> 2^54).
double false_zero_bound(const CounterParams& params);

/// Net-frequency accumulator modulo a random 61-bit prime. A zero net frequency
/// always reads as zero; a non-zero one reads as zero only if p divides it.
class DecisionCounter {
public:
    /// Draws the prime from `seed`.
    explicit DecisionCounter(std::uint64_t seed);
    /// Uses a caller-supplied prime (sketches share one prime per layer).
    DecisionCounter(std::uint64_t seed, std::uint64_t prime) noexcept
        : seed_(seed), prime_(prime) {}

    void add(const BigInt& delta) { add_reduced(reduce_mod(delta, prime_)); }
    void add_reduced(std::uint64_t delta_mod_p) noexcept {
        residue_ = modarith::add(residue_, delta_mod_p, prime_);
    }

    bool is_zero() const noexcept { return residue_ == 0; }
    std::uint64_t residue() const noexcept { return residue_; }
    std::uint64_t prime() const noexcept { return prime_; }
    std::uint64_t seed() const noexcept { return seed_; }

    /// Throws std::invalid_argument if the primes differ.
    void merge(const DecisionCounter& other);

    friend bool operator==(const DecisionCounter&, const DecisionCounter&) = default;

private:
    std::uint64_t seed_;
    std::uint64_t prime_;
    std::uint64_t residue_ = 0;
};

DecisionCounter counter_ingest(const CounterParams& params, std::uint64_t seed,
                               std::span<const BigInt> deltas);
inline bool counter_is_zero(const DecisionCounter& c) { return c.is_zero(); }
DecisionCounter counter_merge(const DecisionCounter& a, const DecisionCounter& b);

/// Distinct-items count with one non-zero detector per element.
/// Throws std::invalid_argument for SGT streams.
std::uint64_t count_distinct(const Stream& stream, const CounterParams& params,
                             std::uint64_t seed);

}  // namespace sgt
