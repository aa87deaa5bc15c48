#include "sgt/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sgt/random.hpp"

namespace sgt {

Edge slot_endpoints(std::uint64_t slot) {
    // Largest v with v(v-1)/2 <= slot.
    auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(slot))) / 2.0);
    while (v * (v - 1) / 2 > slot) {
        --v;
    }
    while ((v + 1) * v / 2 <= slot) {
        ++v;
    }
    const std::uint64_t u = slot - v * (v - 1) / 2;
    return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

Graph::Graph(std::uint32_t n, const std::vector<Edge>& edges) : adj_(n) {
    for (const auto& [u, v] : edges) {
        add_edge(u, v);
    }
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u == v) {
        throw std::invalid_argument("self-loop");
    }
    if (u >= adj_.size() || v >= adj_.size()) {
        throw std::out_of_range("vertex out of range");
    }
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) {
        return;
    }
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edges_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= adj_.size() || v >= adj_.size()) {
        return false;
    }
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

namespace graphs {

Graph complete(std::uint32_t n) {
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Graph complete_bipartite(std::uint32_t a, std::uint32_t b) {
    Graph g(a + b);
    for (Vertex u = 0; u < a; ++u) {
        for (Vertex v = 0; v < b; ++v) {
            g.add_edge(u, a + v);
        }
    }
    return g;
}

Graph cycle(std::uint32_t n) {
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) {
        g.add_edge(v, (v + 1) % n);
    }
    return g;
}

Graph path(std::uint32_t n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1);
    }
    return g;
}

Graph star(std::uint32_t leaves) {
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) {
        g.add_edge(0, v);
    }
    return g;
}

Graph hypercube(std::uint32_t dim) {
    const std::uint32_t n = 1U << dim;
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) {
        for (std::uint32_t b = 0; b < dim; ++b) {
            g.add_edge(v, v ^ (1U << b));
        }
    }
    return g;
}

Graph complete_minus_matching(std::uint32_t n, std::uint32_t count) {
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            const bool matched = (u % 2 == 0) && v == u + 1 && u / 2 < count;
            if (!matched) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

Graph random(std::uint32_t n, double p, std::uint64_t seed) {
    Graph g(n);
    Rng rng(seed);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (rng.chance(p)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

}  // namespace graphs

}  // namespace sgt
