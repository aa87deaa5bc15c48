#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sgt/bigint.hpp"
#include "sgt/graph.hpp"
#include "sgt/l0_sketch.hpp"
#include "sgt/stream.hpp"

namespace sgt {

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n = 0);
    std::size_t find(std::size_t x);
    /// False if already joined.
    bool unite(std::size_t a, std::size_t b);
    std::size_t size() const noexcept { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> weight_;
};

/// Spanning forest: edge list plus the union-find that built it.
struct Forest {
    std::uint32_t n = 0;
    std::vector<Edge> edges;

    /// Connected components induced by the forest edges (sorted, by smallest vertex).
    std::vector<std::vector<Vertex>> components() const;
};

/// Sketch shape used by banks unless told otherwise: few repetitions, since a
/// sampler FAIL only delays a component merge to a later round.
SketchShape bank_default_shape(std::uint32_t n);

/// Signed vertex-incidence sketches: for every vertex and Boruvka round, one
/// L0 sketch over the edge-slot universe. Slot (u, v), u < v, enters u's sketch
/// with +delta and v's with -delta, so merged sketches of a vertex set keep only
/// the slots leaving it.
class VertexSketchBank {
public:
    VertexSketchBank(std::uint32_t n, std::uint64_t seed);
    VertexSketchBank(std::uint32_t n, std::uint64_t seed, const SketchShape& shape,
                     bool flip_orientation = false);

    /// Throws std::out_of_range on vertices >= n, std::invalid_argument on self-loops.
    void ingest(Vertex a, Vertex b, const BigInt& delta);
    void ingest(const StreamToken& token);
    void ingest(const Stream& stream);

    /// Residue-wise sum with an identically seeded bank.
    void merge(const VertexSketchBank& other);

    std::uint32_t vertex_count() const noexcept { return n_; }
    std::uint32_t rounds() const noexcept { return rounds_; }
    const SketchShape& shape() const noexcept { return shape_; }
    const L0Sketch& sketch(Vertex v, std::uint32_t round) const {
        return sketches_.at(std::size_t{round} * n_ + v);
    }
    std::size_t state_bits() const;

    friend bool operator==(const VertexSketchBank& a, const VertexSketchBank& b) {
        return a.n_ == b.n_ && a.sketches_ == b.sketches_;
    }

private:
    std::uint32_t n_;
    std::uint32_t rounds_;
    SketchShape shape_;
    bool flip_;
    std::vector<L0Sketch> sketches_;  // round-major
};

/// Boruvka over the bank: each round merges every component's round-t sketches
/// (components visited by ascending smallest vertex), samples a leaving slot and
/// unions its endpoints. Slots internal to a component are discarded.
Forest spanning_forest(const VertexSketchBank& bank);

/// A forest with n - 1 edges (true for n <= 1).
bool is_connected(const VertexSketchBank& bank);

}  // namespace sgt
