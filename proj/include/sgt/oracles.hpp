#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sgt/bigint.hpp"
#include "sgt/graph.hpp"
#include "sgt/stream.hpp"

namespace sgt {

/// Exact net frequencies of an SGT stream, keyed by edge slot. Zero slots are absent.
struct ExactGraph {
    std::uint32_t n = 0;
    std::map<std::uint64_t, BigInt> freq;

    Graph support() const;
    friend bool operator==(const ExactGraph&, const ExactGraph&) = default;
};

/// Exact net frequencies of an element stream. Zero elements are absent.
using ExactFrequencies = std::map<std::uint64_t, BigInt>;

ExactFrequencies exact_frequencies(const Stream& stream);
/// Throws std::invalid_argument for element streams.
ExactGraph exact_support(const Stream& stream);

enum class PathMode { Vertex, Edge };

using Path = std::vector<Vertex>;

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);
inline std::vector<std::vector<Vertex>> components(const ExactGraph& g) {
    return components(g.support());
}

struct GlobalCut {
    std::size_t value = 0;
    std::vector<Vertex> side;  // one shore, sorted, never empty or all of V
};

/// Stoer-Wagner global minimum cut. Throws std::invalid_argument when n < 2.
GlobalCut min_cut_with_side(const Graph& g);
inline std::size_t min_cut(const Graph& g) { return min_cut_with_side(g).value; }
inline std::size_t min_cut(const ExactGraph& g) { return min_cut(g.support()); }

/// Maximum number of internally vertex-disjoint (or edge-disjoint) s-t paths.
std::size_t local_connectivity(const Graph& g, Vertex s, Vertex t, PathMode mode);

/// kappa(G); n - 1 for complete graphs, 0 for disconnected ones.
std::size_t vertex_connectivity(const Graph& g);
inline std::size_t vertex_connectivity(const ExactGraph& g) { return vertex_connectivity(g.support()); }

struct VertexCut {
    std::vector<Vertex> separator;  // X
    std::vector<Vertex> side;       // S: one component of G - X
};

/// A minimum vertex separator with one resulting side; nullopt for complete graphs.
std::optional<VertexCut> min_vertex_cut(const Graph& g);

/// k paths from s to t, pairwise disjoint in mode (vertex mode shares only s and t),
/// or nullopt when fewer exist. Augmenting paths are found by BFS over sorted
/// adjacency, so results are reproducible.
std::optional<std::vector<Path>> disjoint_paths(const Graph& g, Vertex s, Vertex t, std::size_t k,
                                                PathMode mode);

/// k paths from s into the target set, each truncated at its first target.
/// Vertex mode: paths share only s, except that `shared_target` (if any) may end
/// several paths; other targets end at most one path. Edge mode: edge-disjoint.
/// `s` must not be a target.
std::optional<std::vector<Path>> disjoint_paths_to_set(const Graph& g, Vertex s,
                                                       const std::vector<char>& is_target,
                                                       std::optional<Vertex> shared_target,
                                                       std::size_t k, PathMode mode);

/// As many such paths as exist, up to k.
std::vector<Path> max_disjoint_paths_to_set(const Graph& g, Vertex s, const std::vector<char>& is_target,
                                            std::optional<Vertex> shared_target, std::size_t k,
                                            PathMode mode);

}  // namespace sgt
