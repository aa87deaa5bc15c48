#include "sgt/oracles.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sgt {

Graph ExactGraph::support() const {
    Graph g(n);
    for (const auto& [slot, f] : freq) {
        const auto [u, v] = slot_endpoints(slot);
        g.add_edge(u, v);
    }
    return g;
}

ExactFrequencies exact_frequencies(const Stream& stream) {
    ExactFrequencies out;
    for (const auto& tok : stream.tokens) {
        const std::uint64_t key =
            tok.kind == StreamToken::Kind::Edge ? edge_slot(tok.u, tok.v) : tok.element;
        auto [it, inserted] = out.try_emplace(key, tok.delta);
        if (!inserted) {
            it->second += tok.delta;
            if (it->second == 0) {
                out.erase(it);
            }
        }
    }
    return out;
}

ExactGraph exact_support(const Stream& stream) {
    if (stream.header.model != StreamModel::Sgt) {
        throw std::invalid_argument("exact_support expects an SGT stream");
    }
    ExactGraph g;
    g.n = static_cast<std::uint32_t>(stream.header.universe);
    g.freq = exact_frequencies(stream);
    return g;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    std::vector<int> label(n, -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (label[s] >= 0) {
            continue;
        }
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Vertex> stack{s};
        label[s] = id;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (label[w] < 0) {
                    label[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

GlobalCut min_cut_with_side(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    if (n < 2) {
        throw std::invalid_argument("min_cut needs at least two vertices");
    }
    std::vector<std::vector<std::size_t>> w(n, std::vector<std::size_t>(n, 0));
    for (const auto& [u, v] : g.edges()) {
        w[u][v] = w[v][u] = 1;
    }
    std::vector<std::vector<Vertex>> group(n);
    for (Vertex v = 0; v < n; ++v) {
        group[v] = {v};
    }
    std::vector<Vertex> alive(n);
    std::iota(alive.begin(), alive.end(), 0);

    GlobalCut best;
    best.value = std::numeric_limits<std::size_t>::max();
    while (alive.size() > 1) {
        const std::size_t m = alive.size();
        std::vector<std::size_t> conn(m, 0);
        std::vector<char> added(m, 0);
        std::size_t prev = 0;
        std::size_t last = 0;
        for (std::size_t step = 0; step < m; ++step) {
            std::size_t pick = m;
            for (std::size_t i = 0; i < m; ++i) {
                if (!added[i] && (pick == m || conn[i] > conn[pick])) {
                    pick = i;
                }
            }
            added[pick] = 1;
            prev = last;
            last = pick;
            if (step + 1 == m) {
                if (conn[pick] < best.value) {
                    best.value = conn[pick];
                    best.side = group[alive[pick]];
                }
            }
            for (std::size_t i = 0; i < m; ++i) {
                if (!added[i]) {
                    conn[i] += w[alive[pick]][alive[i]];
                }
            }
        }
        const Vertex keep = alive[prev];
        const Vertex gone = alive[last];
        for (Vertex x : alive) {
            w[keep][x] += w[gone][x];
            w[x][keep] = w[keep][x];
        }
        w[keep][keep] = 0;
        group[keep].insert(group[keep].end(), group[gone].begin(), group[gone].end());
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(last));
    }
    std::sort(best.side.begin(), best.side.end());
    return best;
}

namespace {

/// Unit-capacity flow network with BFS augmentation (Edmonds-Karp).
class FlowNet {
public:
    explicit FlowNet(std::size_t nodes) : out_(nodes) {}

    std::size_t add_arc(std::size_t from, std::size_t to, std::size_t cap) {
        const std::size_t id = arcs_.size();
        arcs_.push_back({to, cap, 0});
        out_[from].push_back(id);
        arcs_.push_back({from, 0, 0});
        out_[to].push_back(id + 1);
        return id;
    }

    std::size_t residual(std::size_t arc) const {
        const Arc& a = arcs_[arc];
        if (arc % 2 == 0) {
            return a.cap - a.flow;
        }
        return arcs_[arc - 1].flow;
    }

    /// Augments one unit along a BFS-shortest path; false if none exists.
    bool augment(std::size_t source, std::size_t sink) {
        std::vector<std::size_t> via(out_.size(), kNone);
        std::vector<char> seen(out_.size(), 0);
        std::deque<std::size_t> queue{source};
        seen[source] = 1;
        while (!queue.empty() && !seen[sink]) {
            const std::size_t x = queue.front();
            queue.pop_front();
            for (std::size_t arc : out_[x]) {
                const std::size_t y = arcs_[arc].to;
                if (!seen[y] && residual(arc) > 0) {
                    seen[y] = 1;
                    via[y] = arc;
                    queue.push_back(y);
                }
            }
        }
        if (!seen[sink]) {
            return false;
        }
        for (std::size_t y = sink; y != source;) {
            const std::size_t arc = via[y];
            if (arc % 2 == 0) {
                ++arcs_[arc].flow;
            } else {
                --arcs_[arc - 1].flow;
            }
            y = arcs_[arc ^ 1].to;
        }
        return true;
    }

    std::size_t max_flow(std::size_t source, std::size_t sink, std::size_t limit) {
        std::size_t f = 0;
        while (f < limit && augment(source, sink)) {
            ++f;
        }
        return f;
    }

    std::vector<char> reachable(std::size_t source) const {
        std::vector<char> seen(out_.size(), 0);
        std::vector<std::size_t> stack{source};
        seen[source] = 1;
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t arc : out_[x]) {
                const std::size_t y = arcs_[arc].to;
                if (!seen[y] && residual(arc) > 0) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        return seen;
    }

    /// Peels one source-sink walk off the flow, dropping any loops.
    std::vector<std::size_t> take_path(std::size_t source, std::size_t sink) {
        std::vector<std::size_t> nodes{source};
        std::vector<std::size_t> used;
        std::size_t x = source;
        while (x != sink) {
            std::size_t next_arc = kNone;
            for (std::size_t arc : out_[x]) {
                if (arc % 2 == 0 && arcs_[arc].flow > 0) {
                    next_arc = arc;
                    break;
                }
            }
            if (next_arc == kNone) {
                throw std::logic_error("flow decomposition lost conservation");
            }
            --arcs_[next_arc].flow;
            x = arcs_[next_arc].to;
            auto loop = std::find(nodes.begin(), nodes.end(), x);
            if (loop != nodes.end()) {
                nodes.erase(loop + 1, nodes.end());
            } else {
                nodes.push_back(x);
            }
        }
        return nodes;
    }

    void cancel_opposite(std::size_t a, std::size_t b) {
        const std::size_t c = std::min(arcs_[a].flow, arcs_[b].flow);
        arcs_[a].flow -= c;
        arcs_[b].flow -= c;
    }

    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

private:
    struct Arc {
        std::size_t to;
        std::size_t cap;
        std::size_t flow;
    };
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::size_t>> out_;
};

/// Network whose source is s and whose sink collects every target.
struct TargetNetwork {
    FlowNet net;
    std::size_t source;
    std::size_t sink;
    std::vector<std::pair<std::size_t, std::size_t>> edge_arcs;  // edge mode opposite pairs
};

TargetNetwork build_network(const Graph& g, Vertex s, const std::vector<char>& is_target,
                            std::optional<Vertex> shared_target, std::size_t k, PathMode mode) {
    const std::uint32_t n = g.vertex_count();
    const std::size_t big = std::max<std::size_t>(k, n) + 1;
    if (mode == PathMode::Vertex) {
        TargetNetwork tn{FlowNet(2 * n + 1), 2 * std::size_t{s} + 1, 2 * std::size_t{n}, {}};
        for (Vertex v = 0; v < n; ++v) {
            const bool wide = v == s || (shared_target && *shared_target == v);
            tn.net.add_arc(2 * v, 2 * v + 1, wide ? big : 1);
        }
        for (Vertex v = 0; v < n; ++v) {
            if (is_target[v]) {
                const bool wide = shared_target && *shared_target == v;
                tn.net.add_arc(2 * v + 1, tn.sink, wide ? big : 1);
                continue;  // paths stop at their first target
            }
            // Vertex capacities already bound these arcs; leaving them wide keeps
            // minimum cuts on vertices. Only s -> shared target needs a unit cap.
            for (Vertex w : g.neighbors(v)) {
                if (w != s) {
                    const bool direct = v == s && shared_target && *shared_target == w;
                    tn.net.add_arc(2 * v + 1, 2 * w, direct ? 1 : big);
                }
            }
        }
        return tn;
    }
    TargetNetwork tn{FlowNet(n + 1), s, n, {}};
    for (Vertex v = 0; v < n; ++v) {
        if (is_target[v]) {
            tn.net.add_arc(v, tn.sink, big);
        }
    }
    for (const auto& [u, v] : g.edges()) {
        const std::size_t a = tn.net.add_arc(u, v, 1);
        const std::size_t b = tn.net.add_arc(v, u, 1);
        tn.edge_arcs.emplace_back(a, b);
    }
    return tn;
}

Path node_path_to_vertices(const std::vector<std::size_t>& nodes, std::size_t sink, PathMode mode) {
    Path p;
    for (std::size_t x : nodes) {
        if (x == sink) {
            break;
        }
        const auto v = static_cast<Vertex>(mode == PathMode::Vertex ? x / 2 : x);
        if (p.empty() || p.back() != v) {
            p.push_back(v);
        }
    }
    return p;
}

}  // namespace

std::vector<Path> max_disjoint_paths_to_set(const Graph& g, Vertex s, const std::vector<char>& is_target,
                                            std::optional<Vertex> shared_target, std::size_t k,
                                            PathMode mode) {
    const std::uint32_t n = g.vertex_count();
    if (s >= n || is_target.size() != n) {
        throw std::invalid_argument("bad source or target mask");
    }
    if (is_target[s]) {
        throw std::invalid_argument("source must not be a target");
    }
    TargetNetwork tn = build_network(g, s, is_target, shared_target, k, mode);
    const std::size_t flow = tn.net.max_flow(tn.source, tn.sink, k);
    for (const auto& [a, b] : tn.edge_arcs) {
        tn.net.cancel_opposite(a, b);
    }
    std::vector<Path> paths;
    paths.reserve(flow);
    for (std::size_t i = 0; i < flow; ++i) {
        Path p = node_path_to_vertices(tn.net.take_path(tn.source, tn.sink), tn.sink, mode);
        for (std::size_t j = 1; j < p.size(); ++j) {
            if (is_target[p[j]]) {
                p.resize(j + 1);
                break;
            }
        }
        paths.push_back(std::move(p));
    }
    return paths;
}

std::optional<std::vector<Path>> disjoint_paths_to_set(const Graph& g, Vertex s,
                                                       const std::vector<char>& is_target,
                                                       std::optional<Vertex> shared_target,
                                                       std::size_t k, PathMode mode) {
    auto paths = max_disjoint_paths_to_set(g, s, is_target, shared_target, k, mode);
    if (paths.size() < k) {
        return std::nullopt;
    }
    return paths;
}

std::optional<std::vector<Path>> disjoint_paths(const Graph& g, Vertex s, Vertex t, std::size_t k,
                                                PathMode mode) {
    if (s == t) {
        throw std::invalid_argument("disjoint_paths needs s != t");
    }
    std::vector<char> target(g.vertex_count(), 0);
    target.at(t) = 1;
    return disjoint_paths_to_set(g, s, target, t, k, mode);
}

std::size_t local_connectivity(const Graph& g, Vertex s, Vertex t, PathMode mode) {
    if (s == t) {
        throw std::invalid_argument("local_connectivity needs s != t");
    }
    std::vector<char> target(g.vertex_count(), 0);
    target.at(t) = 1;
    const std::size_t limit = g.vertex_count();
    TargetNetwork tn = build_network(g, s, target, t, limit, mode);
    return tn.net.max_flow(tn.source, tn.sink, limit);
}

namespace {

struct PairCut {
    std::size_t value;
    Vertex s;
    Vertex t;
};

std::optional<PairCut> min_nonadjacent_pair(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    std::optional<PairCut> best;
    for (Vertex i = 0; i < n && (!best || i <= best->value); ++i) {
        for (Vertex j = 0; j < n; ++j) {
            if (j == i || g.has_edge(i, j)) {
                continue;
            }
            const std::size_t c = local_connectivity(g, i, j, PathMode::Vertex);
            if (!best || c < best->value) {
                best = PairCut{c, i, j};
            }
        }
    }
    return best;
}

}  // namespace

std::size_t vertex_connectivity(const Graph& g) {
    const auto best = min_nonadjacent_pair(g);
    if (!best) {
        return g.vertex_count() == 0 ? 0 : g.vertex_count() - 1;
    }
    return best->value;
}

std::optional<VertexCut> min_vertex_cut(const Graph& g) {
    const auto best = min_nonadjacent_pair(g);
    if (!best) {
        return std::nullopt;
    }
    const std::uint32_t n = g.vertex_count();
    std::vector<char> target(n, 0);
    target[best->t] = 1;
    TargetNetwork tn = build_network(g, best->s, target, best->t, n, PathMode::Vertex);
    tn.net.max_flow(tn.source, tn.sink, n);
    const std::vector<char> reach = tn.net.reachable(tn.source);
    VertexCut cut;
    std::vector<char> removed(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (reach[2 * v] && !reach[2 * v + 1]) {
            cut.separator.push_back(v);
            removed[v] = 1;
        }
    }
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{best->s};
    seen[best->s] = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        cut.side.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w] && !removed[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    std::sort(cut.side.begin(), cut.side.end());
    return cut;
}

}  // namespace sgt
