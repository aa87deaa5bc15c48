#include "sgt/graph_sketch.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sgt/random.hpp"

namespace sgt {

UnionFind::UnionFind(std::size_t n) : parent_(n), weight_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

std::size_t UnionFind::find(std::size_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
        return false;
    }
    if (weight_[a] < weight_[b]) {
        std::swap(a, b);
    }
    parent_[b] = a;
    weight_[a] += weight_[b];
    return true;
}

std::vector<std::vector<Vertex>> Forest::components() const {
    UnionFind uf(n);
    for (const auto& [u, v] : edges) {
        uf.unite(u, v);
    }
    std::map<std::size_t, std::vector<Vertex>> groups;
    for (Vertex v = 0; v < n; ++v) {
        groups[uf.find(v)].push_back(v);
    }
    std::vector<std::vector<Vertex>> out;
    for (auto& [root, members] : groups) {
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SketchShape bank_default_shape(std::uint32_t n) {
    return SketchShape::custom(std::max<std::uint64_t>(1, slot_count(n)), 4, 6);
}

VertexSketchBank::VertexSketchBank(std::uint32_t n, std::uint64_t seed)
    : VertexSketchBank(n, seed, bank_default_shape(n)) {}

VertexSketchBank::VertexSketchBank(std::uint32_t n, std::uint64_t seed, const SketchShape& shape,
                                   bool flip_orientation)
    : n_(n), rounds_(ceil_log2(std::max<std::uint32_t>(n, 1)) + 1), shape_(shape), flip_(flip_orientation) {
    if (shape.universe < slot_count(n)) {
        throw std::invalid_argument("bank shape does not cover every edge slot");
    }
    sketches_.reserve(std::size_t{rounds_} * n_);
    for (std::uint32_t t = 0; t < rounds_; ++t) {
        // One prime and seed per round, shared by all vertices so sketches merge.
        const std::uint64_t round_seed = derive_seed(seed, 0xb0a, t);
        const std::uint64_t prime = sketch_prime(round_seed);
        for (Vertex v = 0; v < n_; ++v) {
            sketches_.emplace_back(shape_, round_seed, prime);
        }
    }
}

void VertexSketchBank::ingest(Vertex a, Vertex b, const BigInt& delta) {
    if (a >= n_ || b >= n_) {
        throw std::out_of_range("edge endpoint outside the bank's vertex range");
    }
    if (a == b) {
        throw std::invalid_argument("self-loop");
    }
    Vertex u = std::min(a, b);
    Vertex v = std::max(a, b);
    if (flip_) {
        std::swap(u, v);
    }
    const std::uint64_t slot = edge_slot(u, v);
    for (std::uint32_t t = 0; t < rounds_; ++t) {
        const std::size_t base = std::size_t{t} * n_;
        const std::uint64_t p = sketches_[base].prime();
        const std::uint64_t d = reduce_mod(delta, p);
        if (d == 0) {
            continue;
        }
        const L0Sketch::Footprint fp = sketches_[base].footprint(slot);
        sketches_[base + u].apply(fp, d);
        sketches_[base + v].apply(fp, modarith::neg(d, p));
    }
}

void VertexSketchBank::ingest(const StreamToken& token) {
    if (token.kind != StreamToken::Kind::Edge) {
        throw std::invalid_argument("bank expects edge tokens");
    }
    ingest(token.u, token.v, token.delta);
}

void VertexSketchBank::ingest(const Stream& stream) {
    for (const auto& tok : stream.tokens) {
        ingest(tok);
    }
}

void VertexSketchBank::merge(const VertexSketchBank& other) {
    if (other.n_ != n_ || other.sketches_.size() != sketches_.size()) {
        throw std::invalid_argument("cannot merge banks of different size");
    }
    for (std::size_t i = 0; i < sketches_.size(); ++i) {
        sketches_[i].merge(other.sketches_[i]);
    }
}

std::size_t VertexSketchBank::state_bits() const {
    std::size_t bits = 0;
    for (const auto& s : sketches_) {
        bits += s.state_bits();
    }
    return bits;
}

Forest spanning_forest(const VertexSketchBank& bank) {
    const std::uint32_t n = bank.vertex_count();
    Forest forest;
    forest.n = n;
    UnionFind uf(n);
    for (std::uint32_t t = 0; t < bank.rounds(); ++t) {
        // Members grouped by representative; std::map walks representatives in
        // ascending order, and the smallest member comes first in each group.
        std::map<std::size_t, std::vector<Vertex>> groups;
        for (Vertex v = 0; v < n; ++v) {
            groups[uf.find(v)].push_back(v);
        }
        if (groups.size() <= 1) {
            break;
        }
        std::vector<std::vector<Vertex>> ordered;
        for (auto& [root, members] : groups) {
            ordered.push_back(std::move(members));
        }
        std::sort(ordered.begin(), ordered.end());

        std::vector<Edge> found;
        bool any_leaving = false;
        for (const auto& members : ordered) {
            L0Sketch merged = bank.sketch(members.front(), t);
            for (std::size_t i = 1; i < members.size(); ++i) {
                merged.merge(bank.sketch(members[i], t));
            }
            if (merged.all_zero()) {
                continue;
            }
            any_leaving = true;
            const auto slot = merged.sample();
            if (!slot) {
                continue;
            }
            const Edge e = slot_endpoints(*slot);
            if (e.second >= n) {
                continue;
            }
            const bool first_inside = std::binary_search(members.begin(), members.end(), e.first);
            const bool second_inside = std::binary_search(members.begin(), members.end(), e.second);
            if (first_inside == second_inside) {
                continue;  // not a leaving slot; only possible on sampler error
            }
            found.push_back(e);
        }
        for (const Edge& e : found) {
            if (uf.unite(e.first, e.second)) {
                forest.edges.push_back(e);
            }
        }
        if (!any_leaving) {
            break;  // every component's cut sketch is empty; later rounds would all FAIL
        }
    }
    return forest;
}

bool is_connected(const VertexSketchBank& bank) {
    const std::uint32_t n = bank.vertex_count();
    if (n <= 1) {
        return true;
    }
    return spanning_forest(bank).edges.size() + 1 == n;
}

}  // namespace sgt
