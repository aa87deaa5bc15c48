#include "sgt/l0_sketch.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "sgt/random.hpp"

namespace sgt {

namespace {

class HashRandomness final : public SketchRandomness {
public:
    std::uint64_t word(std::uint64_t seed, std::uint32_t level, std::uint32_t rep,
                       std::uint64_t element, std::uint32_t lane) const override {
        return prf(seed, (std::uint64_t{level} << 32) | rep, element, lane);
    }
    std::uint64_t id() const override { return 0x4841534852414e44ULL; }
};

constexpr std::uint32_t kFormatVersion = 1;
constexpr char kMagic[4] = {'S', 'G', 'L', '0'};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

std::uint64_t get_le(std::span<const std::uint8_t> bytes, std::size_t& off, int width) {
    if (off + width > bytes.size()) {
        throw std::invalid_argument("truncated sketch frame");
    }
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) {
        v |= std::uint64_t{bytes[off + i]} << (8 * i);
    }
    off += width;
    return v;
}

}  // namespace

std::shared_ptr<const SketchRandomness> hash_randomness() {
    static const auto instance = std::make_shared<const HashRandomness>();
    return instance;
}

std::uint32_t ceil_log2(std::uint64_t x) {
    if (x <= 1) {
        return 0;
    }
    return 64 - static_cast<std::uint32_t>(std::countl_zero(x - 1));
}

std::uint32_t SketchShape::default_repetitions(std::uint64_t universe, const BigInt& alpha) {
    const double log_n = std::log2(static_cast<double>(std::max<std::uint64_t>(universe, 2)));
    double log_alpha = 0;
    if (alpha > 1) {
        const unsigned bits = bit_length(alpha);
        log_alpha = bits > 1000 ? bits : std::log2(alpha.convert_to<double>());
    }
    const double loglog = log_alpha > 1 ? std::log2(log_alpha) : 0.0;
    return std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::ceil(4 * (log_n + loglog))));
}

SketchShape SketchShape::custom(std::uint64_t universe, std::uint32_t reps,
                                std::uint32_t detector_reps) {
    if (universe == 0) {
        throw std::invalid_argument("sketch universe must be positive");
    }
    if (reps == 0 || detector_reps == 0) {
        throw std::invalid_argument("repetition counts must be positive");
    }
    SketchShape s;
    s.universe = universe;
    s.levels = ceil_log2(universe) + 1;
    s.index_bits = std::max<std::uint32_t>(1, ceil_log2(universe));
    s.reps = reps;
    s.detector_reps = detector_reps;
    return s;
}

SketchShape SketchShape::standard(std::uint64_t universe, const BigInt& alpha) {
    const std::uint32_t r = default_repetitions(universe, alpha);
    return custom(universe, r, r);
}

namespace detail {

std::uint64_t decode_support_one(std::span<const std::uint64_t> mask_residues) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < mask_residues.size(); ++i) {
        if (mask_residues[i] == 0) {
            s |= std::uint64_t{1} << i;
        }
    }
    return s;
}

bool detect_support_one(std::span<const std::uint64_t> part_residues) {
    for (std::size_t j = 0; j + 4 <= part_residues.size(); j += 4) {
        int nonzero = 0;
        for (std::size_t part = 0; part < 4; ++part) {
            nonzero += part_residues[j + part] != 0 ? 1 : 0;
        }
        if (nonzero != 1) {
            return false;
        }
    }
    return true;
}

}  // namespace detail

SupportOneSketch make_support_one_sketch(std::uint64_t universe, std::uint64_t seed) {
    return SupportOneSketch(universe, DecisionCounter(seed));
}

SupportOneDetector make_support_one_detector(std::uint64_t universe, std::uint32_t reps,
                                             std::uint64_t seed) {
    return SupportOneDetector(universe, reps, derive_seed(seed, 0xde7), DecisionCounter(seed));
}

std::uint64_t sketch_prime(std::uint64_t seed) { return random_prime61(derive_seed(seed, 0x9e1)); }

L0Sketch::L0Sketch(const SketchShape& shape, std::uint64_t seed,
                   std::shared_ptr<const SketchRandomness> randomness)
    : L0Sketch(shape, seed, sketch_prime(seed), std::move(randomness)) {}

L0Sketch::L0Sketch(const SketchShape& shape, std::uint64_t seed, std::uint64_t prime,
                   std::shared_ptr<const SketchRandomness> randomness)
    : shape_(shape),
      seed_(seed),
      prime_(prime),
      randomness_(std::move(randomness)),
      cells_(shape.counter_count(), 0) {
    if (shape_.universe == 0 || shape_.levels == 0 || shape_.reps == 0 ||
        shape_.detector_reps == 0 || shape_.index_bits == 0 || shape_.levels > 64 ||
        shape_.index_bits > 64) {
        throw std::invalid_argument("malformed sketch shape");
    }
}

void L0Sketch::update_reduced(std::uint64_t element, std::uint64_t d) {
    if (element >= shape_.universe) {
        throw std::out_of_range("element " + std::to_string(element) + " outside sketch universe");
    }
    if (d == 0) {
        return;
    }
    apply(footprint(element), d);
}

L0Sketch::Footprint L0Sketch::footprint(std::uint64_t element) const {
    if (element >= shape_.universe) {
        throw std::out_of_range("element " + std::to_string(element) + " outside sketch universe");
    }
    Footprint fp;
    const std::size_t stride = shape_.cells_per_pair();
    const SketchRandomness& rnd = *randomness_;
    for (std::uint32_t level = 0; level < shape_.levels; ++level) {
        for (std::uint32_t rep = 0; rep < shape_.reps; ++rep) {
            if (!detail::level_admits(rnd, seed_, level, rep, element)) {
                continue;
            }
            const auto pair = static_cast<std::uint32_t>((std::size_t{level} * shape_.reps + rep) * stride);
            fp.cells.push_back(pair);
            for (std::uint32_t i = 0; i < shape_.index_bits; ++i) {
                if (((element >> i) & 1U) == 0) {
                    fp.cells.push_back(pair + 1 + i);
                }
            }
            const std::uint32_t parts = pair + 1 + shape_.index_bits;
            std::uint64_t word = 0;
            for (std::uint32_t j = 0; j < shape_.detector_reps; ++j) {
                if (j % 32 == 0) {
                    word = rnd.word(seed_, level, rep, element, 1 + j / 32);
                }
                const auto part = static_cast<std::uint32_t>((word >> (2 * (j % 32))) & 3U);
                fp.cells.push_back(parts + 4 * j + part);
            }
        }
    }
    return fp;
}

bool L0Sketch::pair_detects(std::size_t base) const noexcept {
    const std::span<const std::uint64_t> parts(cells_.data() + base + 1 + shape_.index_bits,
                                               std::size_t{4} * shape_.detector_reps);
    return detail::detect_support_one(parts);
}

bool L0Sketch::pair_consistent(std::uint32_t level, std::uint32_t rep, std::size_t base,
                               std::uint64_t index) const {
    if (index >= shape_.universe || cells_[base] == 0) {
        return false;
    }
    if (!detail::level_admits(*randomness_, seed_, level, rep, index)) {
        return false;
    }
    const std::uint64_t* parts = cells_.data() + base + 1 + shape_.index_bits;
    for (std::uint32_t j = 0; j < shape_.detector_reps; ++j) {
        const unsigned part = detail::partition_of(*randomness_, seed_, level, rep, index, j);
        if (parts[4 * j + part] == 0) {
            return false;
        }
    }
    return true;
}

std::optional<std::uint64_t> L0Sketch::sample() const {
    const std::size_t stride = shape_.cells_per_pair();
    for (std::uint32_t level = 0; level < shape_.levels; ++level) {
        for (std::uint32_t rep = 0; rep < shape_.reps; ++rep) {
            const std::size_t base = (std::size_t{level} * shape_.reps + rep) * stride;
            if (!pair_detects(base)) {
                continue;
            }
            const std::uint64_t index = detail::decode_support_one(
                std::span<const std::uint64_t>(cells_.data() + base + 1, shape_.index_bits));
            if (pair_consistent(level, rep, base, index)) {
                return index;
            }
        }
    }
    return std::nullopt;
}

bool L0Sketch::all_zero() const noexcept {
    return std::all_of(cells_.begin(), cells_.end(), [](std::uint64_t c) { return c == 0; });
}

bool L0Sketch::compatible(const L0Sketch& other) const noexcept {
    return shape_ == other.shape_ && seed_ == other.seed_ && prime_ == other.prime_ &&
           randomness_->id() == other.randomness_->id();
}

void L0Sketch::merge(const L0Sketch& other) {
    if (!compatible(other)) {
        throw std::invalid_argument("cannot merge sketches with different shape, seed or prime");
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        cells_[i] = modarith::add(cells_[i], other.cells_[i], prime_);
    }
}

void L0Sketch::subtract(const L0Sketch& other) {
    if (!compatible(other)) {
        throw std::invalid_argument("cannot subtract sketches with different shape, seed or prime");
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        cells_[i] = modarith::add(cells_[i], modarith::neg(other.cells_[i], prime_), prime_);
    }
}

void L0Sketch::clear() noexcept { std::fill(cells_.begin(), cells_.end(), 0); }

std::vector<std::uint8_t> L0Sketch::serialize() const {
    std::vector<std::uint8_t> out;
    out.reserve(64 + cells_.size() * 8);
    out.insert(out.end(), kMagic, kMagic + 4);
    put_u32(out, kFormatVersion);
    put_u64(out, seed_);
    put_u64(out, shape_.universe);
    put_u32(out, shape_.levels);
    put_u32(out, shape_.reps);
    put_u32(out, shape_.detector_reps);
    put_u32(out, shape_.index_bits);
    put_u64(out, prime_);
    put_u64(out, randomness_->id());
    put_u64(out, cells_.size());
    for (std::uint64_t c : cells_) {
        put_u64(out, c);
    }
    return out;
}

L0Sketch L0Sketch::deserialize(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 8 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
        throw std::invalid_argument("not a sketch frame");
    }
    std::size_t off = 4;
    if (get_le(bytes, off, 4) != kFormatVersion) {
        throw std::invalid_argument("unsupported sketch frame version");
    }
    const std::uint64_t seed = get_le(bytes, off, 8);
    SketchShape shape;
    shape.universe = get_le(bytes, off, 8);
    shape.levels = static_cast<std::uint32_t>(get_le(bytes, off, 4));
    shape.reps = static_cast<std::uint32_t>(get_le(bytes, off, 4));
    shape.detector_reps = static_cast<std::uint32_t>(get_le(bytes, off, 4));
    shape.index_bits = static_cast<std::uint32_t>(get_le(bytes, off, 4));
    const std::uint64_t prime = get_le(bytes, off, 8);
    const std::uint64_t rid = get_le(bytes, off, 8);
    const std::uint64_t count = get_le(bytes, off, 8);
    if (rid != hash_randomness()->id()) {
        throw std::invalid_argument("sketch frame uses non-default randomness");
    }
    L0Sketch sketch(shape, seed);
    if (sketch.prime_ != prime || count != sketch.cells_.size()) {
        throw std::invalid_argument("sketch frame inconsistent with its seed and shape");
    }
    for (auto& c : sketch.cells_) {
        c = get_le(bytes, off, 8);
        if (c >= prime) {
            throw std::invalid_argument("residue out of range");
        }
    }
    if (off != bytes.size()) {
        throw std::invalid_argument("trailing bytes after sketch frame");
    }
    return sketch;
}

L0Sketch sketch_merge(const L0Sketch& a, const L0Sketch& b) {
    L0Sketch out = a;
    out.merge(b);
    return out;
}

bool multiset_equal(const EqualitySketch& sketch) {
    return !sketch.sketch().sample().has_value() && sketch.sketch().all_zero();
}

}  // namespace sgt
