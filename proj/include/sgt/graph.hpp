#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sgt/stream.hpp"

namespace sgt {

using Edge = std::pair<Vertex, Vertex>;

/// Colex pairing of an unordered pair u < v onto [0, n(n-1)/2).
constexpr std::uint64_t edge_slot(Vertex u, Vertex v) noexcept {
    if (u > v) {
        std::swap(u, v);
    }
    return std::uint64_t{v} * (v - 1) / 2 + u;
}

/// Inverse of edge_slot.
Edge slot_endpoints(std::uint64_t slot);

constexpr std::uint64_t slot_count(std::uint64_t n) noexcept { return n * (n - (n > 0)) / 2; }

/// Simple undirected graph on [n] with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::uint32_t n) : adj_(n) {}
    Graph(std::uint32_t n, const std::vector<Edge>& edges);

    std::uint32_t vertex_count() const noexcept { return static_cast<std::uint32_t>(adj_.size()); }
    std::size_t edge_count() const noexcept { return edges_; }

    /// Adds {u, v} if absent. Throws on self-loops or out-of-range vertices.
    void add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edges_ = 0;
};

namespace graphs {

Graph complete(std::uint32_t n);
Graph complete_bipartite(std::uint32_t a, std::uint32_t b);
Graph cycle(std::uint32_t n);
Graph path(std::uint32_t n);
Graph star(std::uint32_t leaves);
Graph hypercube(std::uint32_t dim);
/// K_n without the edges {2i, 2i+1} for i < count.
Graph complete_minus_matching(std::uint32_t n, std::uint32_t count);
/// Erdos-Renyi G(n, p), deterministic in seed.
Graph random(std::uint32_t n, double p, std::uint64_t seed);

}  // namespace graphs

}  // namespace sgt
