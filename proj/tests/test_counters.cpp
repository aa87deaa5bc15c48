#include <vector>

#include "doctest.h"
#include "sgt/counters.hpp"
#include "sgt/random.hpp"
#include "sgt/stream.hpp"

using namespace sgt;

namespace {

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

BigInt random_big(Rng& rng, unsigned bits) {
    BigInt v = 0;
    for (unsigned i = 0; i < bits; i += 64) {
        v = (v << 64) | BigInt(rng.next());
    }
    return v & (pow2(bits) - 1);
}

}  // namespace

TEST_CASE("modular arithmetic agrees with big integers") {
    Rng rng(1);
    const std::uint64_t p = random_prime61(5);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t a = rng.below(p);
        const std::uint64_t b = rng.below(p);
        CHECK(modarith::add(a, b, p) == static_cast<std::uint64_t>((BigInt(a) + b) % p));
        CHECK(modarith::mul(a, b, p) == static_cast<std::uint64_t>((BigInt(a) * b) % p));
        CHECK(modarith::add(a, modarith::neg(a, p), p) == 0);
    }
    CHECK(modarith::pow(3, p - 1, p) == 1);
}

TEST_CASE("primality tests agree with trial division") {
    for (std::uint64_t n = 0; n < 5000; ++n) {
        CHECK(is_prime_u64(n) == trial_division_prime(n));
        CHECK(is_probable_prime(n, 7) == trial_division_prime(n));
    }
    CHECK(is_prime_u64(2305843009213693951ULL));   // 2^61 - 1
    CHECK_FALSE(is_prime_u64(3215031751ULL));      // strong pseudoprime to bases 2, 3, 5, 7
    CHECK_FALSE(is_prime_u64(2305843009213693953ULL));
}

TEST_CASE("random primes lie in [2^60, 2^61)") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::uint64_t p = random_prime61(seed);
        CHECK(p >= (1ULL << 60));
        CHECK(p < (1ULL << 61));
        CHECK(is_probable_prime(p, seed + 1000, 40));
        CHECK(p == random_prime61(seed));
    }
    CHECK(random_prime61(1) != random_prime61(2));
}

TEST_CASE("decision counter examples") {
    const std::vector<BigInt> zero{1, 1, -2};
    CHECK(counter_is_zero(counter_ingest(CounterParams{1, 2}, 3, zero)));
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::vector<BigInt> one{1};
        CHECK_FALSE(counter_is_zero(counter_ingest(CounterParams{1, 1}, seed, one)));
    }
    CHECK_THROWS_AS(CounterParams({0, 1}).validate(), std::invalid_argument);
}

TEST_CASE("large non-zero sums are not reported as zero") {
    Rng rng(77);
    const CounterParams params{1, pow2(256)};
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        // Parts summing exactly to 2^200.
        const BigInt a = random_big(rng, 250);
        const std::vector<BigInt> deltas{a, pow2(200) - a};
        CHECK_FALSE(counter_ingest(params, seed, deltas).is_zero());
    }
}

TEST_CASE("counter merge is linear") {
    DecisionCounter a(9);
    DecisionCounter b(9);
    CHECK(counter_merge(a, b).is_zero());
    a.add(5);
    b.add(-5);
    CHECK(counter_merge(a, b).is_zero());

    Rng rng(4);
    std::vector<BigInt> deltas;
    for (int i = 0; i < 200; ++i) {
        BigInt d = random_big(rng, 130);
        deltas.push_back(rng.chance(0.5) ? d : BigInt(-d));
    }
    const DecisionCounter whole = counter_ingest(CounterParams{1, pow2(140)}, 12, deltas);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t cut = rng.below(deltas.size() + 1);
        DecisionCounter left(12);
        DecisionCounter right(12);
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            (i < cut ? left : right).add(deltas[i]);
        }
        CHECK(counter_merge(left, right) == whole);
    }
    CHECK_THROWS_AS(DecisionCounter(1).merge(DecisionCounter(2)), std::invalid_argument);
}

TEST_CASE("distinct items") {
    std::vector<std::string> blocks;
    for (int i = 0; i < 8; ++i) {
        blocks.push_back(i % 2 ? "1010" : "0110");
    }
    const EqIdxInstance inst{blocks, "1010", 4};
    REQUIRE(inst.answer());
    const Stream s = gen_eqidx_distinct_items(inst);
    CHECK(count_distinct(s, CounterParams{8, s.header.alpha}, 1) == 7);

    Stream empty;
    empty.header = {StreamModel::Element, 16, 1};
    CHECK(count_distinct(empty, CounterParams{16, 1}, 1) == 0);

    Stream edges;
    edges.header = {StreamModel::Sgt, 4, 1};
    CHECK_THROWS_AS(count_distinct(edges, CounterParams{6, 1}, 1), std::invalid_argument);
}

TEST_CASE("distinct items with products of small primes") {
    Rng rng(8);
    const std::uint64_t small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    int exact = 0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
        std::vector<BigInt> freq(256, 0);
        std::size_t support = 0;
        for (auto& f : freq) {
            if (rng.chance(0.3)) {
                BigInt v = 1;
                while (v < pow2(100)) {
                    v *= small_primes[rng.below(11)];
                }
                f = rng.chance(0.5) ? v : BigInt(-v);
                ++support;
            }
        }
        const Stream s = stream_from_frequencies(freq, pow2(128), t, true);
        exact += count_distinct(s, CounterParams{256, pow2(128)}, t) == support ? 1 : 0;
    }
    CHECK(exact >= trials * 99 / 100);
}
