#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sgt/bigint.hpp"
#include "sgt/counters.hpp"

namespace sgt {

/// Source of the per-element random bits used by filters and partitions.
/// `lane` 0 drives the level filter, lanes >= 1 carry 2-bit partition labels.
class SketchRandomness {
public:
    virtual ~SketchRandomness() = default;
    virtual std::uint64_t word(std::uint64_t seed, std::uint32_t level, std::uint32_t rep,
                               std::uint64_t element, std::uint32_t lane) const = 0;
    /// Identity used to refuse merges between sketches with different randomness.
    virtual std::uint64_t id() const = 0;
};

/// Keyed-PRF randomness (the default).
std::shared_ptr<const SketchRandomness> hash_randomness();

/// Dimensions of an L0 sketch.
struct SketchShape {
    std::uint64_t universe = 1;
    std::uint32_t levels = 1;         // ceil(log2 N) + 1 sampling levels
    std::uint32_t reps = 1;           // repetitions per level
    std::uint32_t detector_reps = 1;  // 4-way partitions per support-one detector
    std::uint32_t index_bits = 1;     // ceil(log2 N), at least 1

    /// r = ceil(4 * (log2 N + log2 log2 alpha)) for both repetition counts.
    static SketchShape standard(std::uint64_t universe, const BigInt& alpha);
    static SketchShape custom(std::uint64_t universe, std::uint32_t reps,
                              std::uint32_t detector_reps);
    static std::uint32_t default_repetitions(std::uint64_t universe, const BigInt& alpha);

    std::size_t cells_per_pair() const { return 1 + index_bits + 4 * std::size_t{detector_reps}; }
    std::size_t pair_count() const { return std::size_t{levels} * reps; }
    std::size_t counter_count() const { return pair_count() * cells_per_pair(); }

    friend bool operator==(const SketchShape&, const SketchShape&) = default;
};

std::uint32_t ceil_log2(std::uint64_t x);

namespace detail {

/// Non-adaptive binary search: bit i of the answer is 1 iff the inner product
/// with mask a_i (ones where bit i of the index is 0) is zero.
std::uint64_t decode_support_one(std::span<const std::uint64_t> mask_residues);

/// Residues laid out as 4 consecutive parts per repetition. True iff every
/// repetition has exactly one non-zero part.
bool detect_support_one(std::span<const std::uint64_t> part_residues);

inline unsigned partition_of(const SketchRandomness& rnd, std::uint64_t seed, std::uint32_t level,
                             std::uint32_t rep, std::uint64_t element, std::uint32_t j) {
    const std::uint64_t w = rnd.word(seed, level, rep, element, 1 + j / 32);
    return static_cast<unsigned>((w >> (2 * (j % 32))) & 3U);
}

inline bool level_admits(const SketchRandomness& rnd, std::uint64_t seed, std::uint32_t level,
                         std::uint32_t rep, std::uint64_t element) {
    if (level == 0) {
        return true;
    }
    const std::uint64_t w = rnd.word(seed, level, rep, element, 0);
    return (w >> (64 - level)) == 0;
}

}  // namespace detail

/// Support-one recovery over an arbitrary counter type (anything with
/// add(BigInt) and is_zero()): one counter per index bit plus a total.
template <class Counter>
class BasicSupportOneSketch {
public:
    BasicSupportOneSketch(std::uint64_t universe, const Counter& prototype)
        : universe_(universe),
          masks_(ceil_log2(universe) == 0 ? 1 : ceil_log2(universe), prototype),
          total_(prototype) {}

    void update(std::uint64_t element, const BigInt& delta) {
        if (element >= universe_) {
            throw std::out_of_range("element outside sketch universe");
        }
        total_.add(delta);
        for (std::size_t i = 0; i < masks_.size(); ++i) {
            if (((element >> i) & 1U) == 0) {
                masks_[i].add(delta);
            }
        }
    }

    const std::vector<Counter>& masks() const { return masks_; }
    const Counter& total() const { return total_; }
    std::uint64_t universe() const { return universe_; }

private:
    std::uint64_t universe_;
    std::vector<Counter> masks_;
    Counter total_;
};

/// Returns the index assembled bit by bit; meaningful only when the support has size 1.
template <class Counter>
std::uint64_t support_one_recover(const BasicSupportOneSketch<Counter>& sketch) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < sketch.masks().size(); ++i) {
        if (sketch.masks()[i].is_zero()) {
            s |= std::uint64_t{1} << i;
        }
    }
    return s;
}

/// r seeded 4-way partitions with one counter per part.
template <class Counter>
class BasicSupportOneDetector {
public:
    BasicSupportOneDetector(std::uint64_t universe, std::uint32_t reps, std::uint64_t seed,
                            const Counter& prototype,
                            std::shared_ptr<const SketchRandomness> randomness = hash_randomness())
        : universe_(universe),
          reps_(reps),
          seed_(seed),
          randomness_(std::move(randomness)),
          parts_(std::size_t{4} * reps, prototype) {}

    void update(std::uint64_t element, const BigInt& delta) {
        if (element >= universe_) {
            throw std::out_of_range("element outside sketch universe");
        }
        for (std::uint32_t j = 0; j < reps_; ++j) {
            parts_[4 * j + part_of(element, j)].add(delta);
        }
    }

    unsigned part_of(std::uint64_t element, std::uint32_t j) const {
        return detail::partition_of(*randomness_, seed_, 0, 0, element, j);
    }

    std::uint32_t reps() const { return reps_; }
    const std::vector<Counter>& parts() const { return parts_; }

private:
    std::uint64_t universe_;
    std::uint32_t reps_;
    std::uint64_t seed_;
    std::shared_ptr<const SketchRandomness> randomness_;
    std::vector<Counter> parts_;
};

template <class Counter>
bool support_one_detect(const BasicSupportOneDetector<Counter>& detector) {
    for (std::uint32_t j = 0; j < detector.reps(); ++j) {
        int nonzero = 0;
        for (unsigned part = 0; part < 4; ++part) {
            nonzero += detector.parts()[4 * j + part].is_zero() ? 0 : 1;
        }
        if (nonzero != 1) {
            return false;
        }
    }
    return true;
}

using SupportOneSketch = BasicSupportOneSketch<DecisionCounter>;
using SupportOneDetector = BasicSupportOneDetector<DecisionCounter>;

SupportOneSketch make_support_one_sketch(std::uint64_t universe, std::uint64_t seed);
SupportOneDetector make_support_one_detector(std::uint64_t universe, std::uint32_t reps,
                                             std::uint64_t seed);

/// Strong L0 sampler: geometric sub-sampling levels, each with `reps`
/// independent (support-one sketch, support-one detector) pairs over the
/// filtered sub-universe. All counters of one sketch share a 61-bit prime
/// derived from the seed, so equally seeded sketches merge by residue addition.
///
/// Cell layout per (level, rep) pair: [total, mask_0 .. mask_{b-1}, z_{0,0..3} .. z_{r-1,0..3}].
class L0Sketch {
public:
    L0Sketch(const SketchShape& shape, std::uint64_t seed,
             std::shared_ptr<const SketchRandomness> randomness = hash_randomness());
    /// Skips prime generation; `prime` must equal sketch_prime(seed).
    L0Sketch(const SketchShape& shape, std::uint64_t seed, std::uint64_t prime,
             std::shared_ptr<const SketchRandomness> randomness = hash_randomness());

    /// Throws std::out_of_range for elements outside the universe.
    void update(std::uint64_t element, const BigInt& delta) {
        update_reduced(element, reduce_mod(delta, prime_));
    }
    /// Same, with the delta already reduced modulo prime().
    void update_reduced(std::uint64_t element, std::uint64_t delta_mod_p);

    /// Cell offsets touched by one element; identical for every sketch with the
    /// same shape, seed and randomness, so it can be reused across them.
    struct Footprint {
        std::vector<std::uint32_t> cells;
    };
    Footprint footprint(std::uint64_t element) const;
    void apply(const Footprint& fp, std::uint64_t delta_mod_p) noexcept {
        for (std::uint32_t c : fp.cells) {
            cells_[c] = modarith::add(cells_[c], delta_mod_p, prime_);
        }
    }

    /// An element with non-zero frequency, or nullopt (FAIL).
    std::optional<std::uint64_t> sample() const;

    /// True iff every counter is zero.
    bool all_zero() const noexcept;

    /// Residue-wise sum. Throws std::invalid_argument on shape/seed/prime mismatch.
    void merge(const L0Sketch& other);
    /// Residue-wise difference (same preconditions as merge).
    void subtract(const L0Sketch& other);
    void clear() noexcept;
    bool compatible(const L0Sketch& other) const noexcept;

    const SketchShape& shape() const noexcept { return shape_; }
    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t prime() const noexcept { return prime_; }
    std::span<const std::uint64_t> residues() const noexcept { return cells_; }

    /// Working-state size: one 64-bit word per counter plus seed, prime and shape words.
    std::size_t state_bits() const noexcept { return (cells_.size() + 6) * 64; }

    /// Versioned little-endian frame: magic "SGL0", version, seed, shape, prime,
    /// randomness id, residues.
    std::vector<std::uint8_t> serialize() const;
    /// Rebuilds a sketch from serialize() output (hash randomness only).
    static L0Sketch deserialize(std::span<const std::uint8_t> bytes);

    friend bool operator==(const L0Sketch& a, const L0Sketch& b) {
        return a.compatible(b) && a.cells_ == b.cells_;
    }

private:
    bool pair_detects(std::size_t base) const noexcept;
    bool pair_consistent(std::uint32_t level, std::uint32_t rep, std::size_t base,
                         std::uint64_t index) const;

    SketchShape shape_;
    std::uint64_t seed_;
    std::uint64_t prime_;
    std::shared_ptr<const SketchRandomness> randomness_;
    std::vector<std::uint64_t> cells_;
};

/// The 61-bit prime an L0 sketch with this seed uses.
std::uint64_t sketch_prime(std::uint64_t seed);

inline std::optional<std::uint64_t> l0_sample(const L0Sketch& sketch) { return sketch.sample(); }
L0Sketch sketch_merge(const L0Sketch& a, const L0Sketch& b);

/// Multiset equality by the insert-one-side/delete-other-side trick.
class EqualitySketch {
public:
    EqualitySketch(const SketchShape& shape, std::uint64_t seed) : sketch_(shape, seed) {}

    void insert(std::uint64_t element, const BigInt& count = 1) { sketch_.update(element, count); }
    void erase(std::uint64_t element, const BigInt& count = 1) { sketch_.update(element, -count); }
    void insert_reduced(std::uint64_t element, std::uint64_t count_mod_p) {
        sketch_.update_reduced(element, count_mod_p);
    }
    void erase_reduced(std::uint64_t element, std::uint64_t count_mod_p) {
        sketch_.update_reduced(element, modarith::neg(count_mod_p, sketch_.prime()));
    }
    void reset() noexcept { sketch_.clear(); }

    const L0Sketch& sketch() const noexcept { return sketch_; }
    std::size_t state_bits() const noexcept { return sketch_.state_bits(); }

private:
    L0Sketch sketch_;
};

/// True iff the sampler FAILs and every counter, total included, is zero.
bool multiset_equal(const EqualitySketch& sketch);

}  // namespace sgt
