#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "sgt/annotated.hpp"
#include "sgt/random.hpp"
#include "wire.hpp"

namespace sgt {

const char* scheme_name(SchemeId id) {
    switch (id) {
        case SchemeId::KVConn: return "kvconn";
        case SchemeId::KEConn: return "keconn";
        case SchemeId::Gap: return "gap";
        case SchemeId::AM: return "am";
        case SchemeId::Sgt: return "sgt";
    }
    return "?";
}

SchemeId parse_scheme(const std::string& name) {
    for (SchemeId id : {SchemeId::KVConn, SchemeId::KEConn, SchemeId::Gap, SchemeId::AM, SchemeId::Sgt}) {
        if (name == scheme_name(id)) {
            return id;
        }
    }
    throw std::invalid_argument("unknown scheme '" + name + "'");
}

const char* behavior_name(ProverBehavior b) {
    switch (b) {
        case ProverBehavior::Honest: return "honest";
        case ProverBehavior::EdgeNotInInput: return "edge-not-in-input";
        case ProverBehavior::MultiplicityLie: return "multiplicity-lie";
        case ProverBehavior::SignLie: return "sign-lie";
        case ProverBehavior::NonDisjoint: return "non-disjoint";
        case ProverBehavior::BrokenPath: return "broken-path";
        case ProverBehavior::UndersizedCut: return "undersized-cut";
        case ProverBehavior::TerminalDuplication: return "terminal-duplication";
    }
    return "?";
}

std::vector<ProverBehavior> tamper_classes() {
    return {ProverBehavior::EdgeNotInInput, ProverBehavior::MultiplicityLie,
            ProverBehavior::SignLie,        ProverBehavior::NonDisjoint,
            ProverBehavior::BrokenPath,     ProverBehavior::UndersizedCut,
            ProverBehavior::TerminalDuplication};
}

ProverBehavior parse_behavior(const std::string& name) {
    if (name == "honest") {
        return ProverBehavior::Honest;
    }
    for (ProverBehavior b : tamper_classes()) {
        if (name == behavior_name(b)) {
            return b;
        }
    }
    throw std::invalid_argument("unknown prover behavior '" + name + "'");
}

std::size_t LayeredProof::total_length() const {
    std::size_t total = 0;
    for (const auto& g : groups) {
        for (const auto& p : g.paths) {
            total += p.length();
        }
    }
    return total;
}

std::uint32_t layer_count(std::uint32_t n, std::uint32_t k) {
    if (k == 0 || n <= k) {
        return 0;
    }
    return ceil_log2((n + k - 1) / k);
}

std::uint32_t layer_of(std::uint64_t layer_seed, Vertex v, std::uint32_t n, std::uint32_t k) {
    const std::uint32_t ell = layer_count(n, k);
    for (std::uint32_t i = 0; i < ell; ++i) {
        // p_i = k 2^i / n < 1 for i < ell
        const long double p = std::ldexp(static_cast<long double>(k) / n, static_cast<int>(i));
        const auto threshold = static_cast<std::uint64_t>(p * 0x1.0p64L);
        if (prf(layer_seed, i, v, 0) < threshold || prf(layer_seed, i, v, 1) < threshold) {
            return i;
        }
    }
    return ell;
}

std::size_t layered_size_bound(std::uint32_t n, std::uint32_t k, PathMode mode) {
    const std::size_t logs = std::max<std::uint32_t>(1, layer_count(n, k));
    const std::size_t kk = mode == PathMode::Vertex ? k : std::size_t{k} * k;
    return 16 * kk * n * logs;
}

namespace {

/// Called when a vertex has fewer disjoint paths than required; may append
/// paths (cheating) or throw.
using Filler = std::function<void(Vertex v, const std::vector<char>& is_target, std::vector<Path>& paths)>;

struct BaseSpec {
    std::vector<Vertex> members;
    bool is_set = false;
};

bool is_base(const BaseSpec& base, Vertex v) {
    return std::binary_search(base.members.begin(), base.members.end(), v);
}

VertexGroup make_group(Vertex v, std::vector<Path> paths, const BaseSpec& base, PathMode mode) {
    VertexGroup group;
    group.v = v;
    for (const Path& p : paths) {
        if (mode == PathMode::Vertex) {
            for (std::size_t i = 1; i < p.size(); ++i) {
                if (!base.is_set && p[i] == base.members.front()) {
                    continue;
                }
                group.disjoint_list.push_back(p[i]);
            }
        } else {
            for (std::size_t i = 1; i < p.size(); ++i) {
                group.disjoint_list.push_back(edge_slot(p[i - 1], p[i]));
            }
        }
        group.paths.push_back(PathProof{p, {}});
    }
    std::sort(group.disjoint_list.begin(), group.disjoint_list.end());
    group.disjoint_list.erase(std::unique(group.disjoint_list.begin(), group.disjoint_list.end()),
                              group.disjoint_list.end());
    return group;
}

/// Layered proof for one base. Retries layer seeds while the total length exceeds
/// the bound (only when `enforce_bound`).
LayeredProof build_layered(const Graph& g, const BaseSpec& base, std::uint32_t kp, PathMode mode,
                           std::uint64_t seed, const Filler& fill, bool enforce_bound) {
    const std::uint32_t n = g.vertex_count();
    const std::size_t bound = layered_size_bound(n, kp, mode);
    const std::optional<Vertex> shared =
        (!base.is_set && mode == PathMode::Vertex) ? std::optional<Vertex>(base.members.front())
                                                   : std::nullopt;
    for (std::uint32_t attempt = 0; attempt < kMaxLayerRetries; ++attempt) {
        LayeredProof proof;
        proof.mode = mode;
        proof.base = base.members;
        proof.base_is_set = base.is_set;
        proof.paths_per_vertex = kp;
        proof.layer_seed = derive_seed(seed, 0x1a7e, attempt);
        proof.retries = attempt;
        std::vector<std::uint32_t> layer(n, 0);
        for (Vertex v = 0; v < n; ++v) {
            layer[v] = layer_of(proof.layer_seed, v, n, kp);
        }
        for (Vertex v = 0; v < n; ++v) {
            if (is_base(base, v)) {
                continue;
            }
            std::vector<char> target(n, 0);
            for (Vertex w = 0; w < n; ++w) {
                target[w] = (is_base(base, w) || layer[w] < layer[v]) ? 1 : 0;
            }
            std::vector<Path> paths = max_disjoint_paths_to_set(g, v, target, shared, kp, mode);
            if (paths.size() < kp) {
                fill(v, target, paths);
            }
            proof.groups.push_back(make_group(v, std::move(paths), base, mode));
        }
        if (!enforce_bound || proof.total_length() <= bound) {
            return proof;
        }
    }
    throw std::runtime_error("no layer seed met the proof size bound within 64 attempts");
}

Filler honest_filler() {
    return [](Vertex v, const std::vector<char>&, std::vector<Path>&) {
        throw NoSuchProof("vertex " + std::to_string(v) + " lacks enough disjoint paths");
    };
}

/// Cheating fillers pad a group to kp paths.
Filler cheating_filler(ProverBehavior behavior, std::uint32_t kp, const Graph& g) {
    return [behavior, kp, &g](Vertex v, const std::vector<char>& target, std::vector<Path>& paths) {
        std::set<Vertex> used_ends;
        for (const Path& p : paths) {
            used_ends.insert(p.back());
        }
        auto fake_edge_path = [&]() {
            // Prefer a target that is not adjacent to v, so the edge is absent from the input.
            std::optional<Vertex> pick;
            for (Vertex w = 0; w < target.size(); ++w) {
                if (!target[w] || w == v || used_ends.count(w)) {
                    continue;
                }
                if (!g.has_edge(v, w)) {
                    pick = w;
                    break;
                }
                if (!pick) {
                    pick = w;
                }
            }
            if (!pick) {
                for (Vertex w = 0; w < target.size(); ++w) {
                    if (target[w] && w != v) {
                        pick = w;
                        break;
                    }
                }
            }
            used_ends.insert(*pick);
            return Path{v, *pick};
        };
        while (paths.size() < kp) {
            if (behavior == ProverBehavior::NonDisjoint && !paths.empty()) {
                paths.push_back(paths.front());
            } else if (behavior == ProverBehavior::BrokenPath && !paths.empty()) {
                Path p = paths.front();
                p.pop_back();
                paths.push_back(p);
            } else if (behavior == ProverBehavior::BrokenPath) {
                const auto& nb = g.neighbors(v);
                paths.push_back(nb.empty() ? Path{v} : Path{v, nb.front()});
            } else {
                paths.push_back(fake_edge_path());
            }
        }
    };
}

struct SchemePlan {
    PathMode mode = PathMode::Vertex;
    std::uint32_t kp = 1;  // paths per vertex
    std::vector<BaseSpec> bases;
};

std::vector<BaseSpec> single_terminals(const std::vector<Vertex>& ts) {
    std::vector<BaseSpec> out;
    for (Vertex t : ts) {
        out.push_back(BaseSpec{{t}, false});
    }
    return out;
}

std::vector<Vertex> first_vertices(std::uint32_t count) {
    std::vector<Vertex> out(count);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

void require_vertex_k(std::uint32_t n, std::uint32_t k) {
    if (k == 0 || k >= n) {
        throw std::invalid_argument("vertex-connectivity schemes need 1 <= k < n");
    }
}

SchemePlan plan_for(SchemeId scheme, std::uint32_t n, std::uint32_t k, PathMode sgt_mode,
                    std::uint64_t public_seed) {
    SchemePlan plan;
    switch (scheme) {
        case SchemeId::KVConn:
            require_vertex_k(n, k);
            plan = {PathMode::Vertex, k, single_terminals(first_vertices(k))};
            break;
        case SchemeId::KEConn:
            if (k == 0 || n < 2) {
                throw std::invalid_argument("edge-connectivity scheme needs k >= 1 and n >= 2");
            }
            plan = {PathMode::Edge, k, single_terminals({0})};
            break;
        case SchemeId::Gap:
            require_vertex_k(n, k);
            if (n >= 4 * k) {
                plan.mode = PathMode::Vertex;
                plan.kp = 2 * k;
                std::vector<Vertex> left(2 * k);
                std::vector<Vertex> right(2 * k);
                std::iota(left.begin(), left.end(), 0);
                std::iota(right.begin(), right.end(), 2 * k);
                plan.bases = {BaseSpec{left, true}, BaseSpec{right, true}};
            } else {
                plan = {PathMode::Vertex, k, single_terminals(first_vertices(k))};
            }
            break;
        case SchemeId::AM:
            require_vertex_k(n, k);
            plan = {PathMode::Vertex, k, single_terminals(am_terminals(n, public_seed))};
            break;
        case SchemeId::Sgt:
            if (sgt_mode == PathMode::Vertex) {
                require_vertex_k(n, k);
                plan = {PathMode::Vertex, k, single_terminals(first_vertices(k))};
            } else {
                if (k == 0 || n < 2) {
                    throw std::invalid_argument("edge-connectivity scheme needs k >= 1 and n >= 2");
                }
                plan = {PathMode::Edge, k, single_terminals({0})};
            }
            break;
    }
    return plan;
}

/// A cut with at most k - 1 removed elements that does not actually separate the
/// graph (its crossing edges will simply be left out of the disclosure).
CutProof bogus_cut(const Graph& g, std::uint32_t k, PathMode mode) {
    const std::uint32_t n = g.vertex_count();
    CutProof cut;
    cut.mode = mode;
    if (mode == PathMode::Vertex) {
        for (Vertex v = 0; v + 1 < k && v + 2 < n; ++v) {
            cut.separator.push_back(v);
        }
        cut.side = {static_cast<Vertex>(cut.separator.size())};
    } else {
        cut.side = {0};
        for (Vertex w : g.neighbors(0)) {
            if (cut.cut_edges.size() + 1 >= k) {
                break;
            }
            cut.cut_edges.push_back(edge_slot(0, w));
        }
        std::sort(cut.cut_edges.begin(), cut.cut_edges.end());
    }
    return cut;
}

bool crosses(const CutProof& cut, Vertex a, Vertex b) {
    const bool sa = std::binary_search(cut.side.begin(), cut.side.end(), a);
    const bool sb = std::binary_search(cut.side.begin(), cut.side.end(), b);
    if (sa == sb) {
        return false;
    }
    if (cut.mode == PathMode::Vertex) {
        const bool xa = std::binary_search(cut.separator.begin(), cut.separator.end(), a);
        const bool xb = std::binary_search(cut.separator.begin(), cut.separator.end(), b);
        return !(xa || xb);
    }
    return !std::binary_search(cut.cut_edges.begin(), cut.cut_edges.end(), edge_slot(a, b));
}

bool is_k_connected(const Graph& g, std::uint32_t k, PathMode mode) {
    if (mode == PathMode::Vertex) {
        return vertex_connectivity(g) >= k;
    }
    return g.vertex_count() >= 2 && min_cut(g) >= k;
}

}  // namespace

LayeredProof layering_prove(const Graph& g, Vertex terminal, std::uint32_t k, PathMode mode,
                            std::uint64_t seed) {
    if (terminal >= g.vertex_count()) {
        throw std::invalid_argument("terminal out of range");
    }
    return build_layered(g, BaseSpec{{terminal}, false}, k, mode, seed, honest_filler(), true);
}

LayeredProof layering_prove_set(const Graph& g, const std::vector<Vertex>& terminals,
                                std::uint32_t k, PathMode mode, std::uint64_t seed) {
    BaseSpec base{terminals, true};
    std::sort(base.members.begin(), base.members.end());
    return build_layered(g, base, k, mode, seed, honest_filler(), true);
}

CutProof prove_not_k_connected(const Graph& g, std::uint32_t k, PathMode mode) {
    const std::uint32_t n = g.vertex_count();
    CutProof cut;
    cut.mode = mode;
    if (mode == PathMode::Vertex) {
        const auto vc = min_vertex_cut(g);
        if (!vc || vc->separator.size() >= k) {
            throw NoSuchProof("NO_SUCH_CUT: graph is " + std::to_string(k) + "-vertex-connected");
        }
        cut.separator = vc->separator;
        cut.side = vc->side;
        return cut;
    }
    if (n < 2) {
        throw NoSuchProof("NO_SUCH_CUT: fewer than two vertices");
    }
    const GlobalCut gc = min_cut_with_side(g);
    if (gc.value >= k) {
        throw NoSuchProof("NO_SUCH_CUT: graph is " + std::to_string(k) + "-edge-connected");
    }
    cut.side = gc.side;
    for (const auto& [a, b] : g.edges()) {
        const bool sa = std::binary_search(cut.side.begin(), cut.side.end(), a);
        const bool sb = std::binary_search(cut.side.begin(), cut.side.end(), b);
        if (sa != sb) {
            cut.cut_edges.push_back(edge_slot(a, b));
        }
    }
    std::sort(cut.cut_edges.begin(), cut.cut_edges.end());
    return cut;
}

std::vector<Vertex> am_terminals(std::uint32_t n, std::uint64_t public_seed) {
    const std::uint32_t ell = std::min<std::uint32_t>(n, 2 * ceil_log2(std::max<std::uint32_t>(n, 2)));
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    Rng rng(derive_seed(public_seed, 0xa3));
    for (std::uint32_t i = 0; i < ell; ++i) {
        std::swap(all[i], all[i + rng.below(n - i)]);
    }
    all.resize(ell);
    std::sort(all.begin(), all.end());
    return all;
}

Proof prove(const Stream& stream, const ProverConfig& cfg) {
    const ExactGraph exact = exact_support(stream);
    const Graph g = exact.support();
    const std::uint32_t n = exact.n;
    const SchemePlan plan = plan_for(cfg.scheme, n, cfg.k, cfg.mode, cfg.public_seed);
    const bool sgt = cfg.scheme == SchemeId::Sgt;

    Proof proof;
    proof.scheme = cfg.scheme;
    proof.mode = plan.mode;
    proof.k = cfg.k;
    proof.n = n;

    const ProverBehavior b = cfg.behavior;
    const bool cheats_true = b == ProverBehavior::EdgeNotInInput || b == ProverBehavior::NonDisjoint ||
                             b == ProverBehavior::BrokenPath || b == ProverBehavior::TerminalDuplication;
    if (b == ProverBehavior::UndersizedCut) {
        proof.claim = false;
    } else if (cheats_true) {
        proof.claim = true;
    } else {
        // Gap promise: connectivity below k, or at least 2k.
        proof.claim = is_k_connected(g, cfg.k, plan.mode);
    }

    if (!proof.claim) {
        CutProof cut = b == ProverBehavior::UndersizedCut ? bogus_cut(g, cfg.k, plan.mode)
                                                          : prove_not_k_connected(g, cfg.k, plan.mode);
        for (const auto& [slot, f] : exact.freq) {
            const auto [a, c] = slot_endpoints(slot);
            if (b == ProverBehavior::UndersizedCut && crosses(cut, a, c)) {
                continue;
            }
            proof.disclosure.push_back(DisclosureRecord{slot, f, 0});
        }
        proof.cut = std::move(cut);
    } else {
        const std::uint64_t pseed = derive_seed(cfg.seed, 0x9a07);
        const Filler fill = cheats_true ? cheating_filler(b == ProverBehavior::TerminalDuplication
                                                              ? ProverBehavior::NonDisjoint
                                                              : b,
                                                          plan.kp, g)
                                        : honest_filler();
        if (b == ProverBehavior::TerminalDuplication) {
            // Replace terminals whose proof would need padding by one whose proof is genuine.
            std::optional<Vertex> good;
            for (Vertex t = 0; t < n && !good; ++t) {
                try {
                    build_layered(g, BaseSpec{{t}, false}, plan.kp, plan.mode, pseed, honest_filler(), false);
                    good = t;
                } catch (const NoSuchProof&) {
                }
            }
            std::vector<BaseSpec> bases = plan.bases;
            if (bases.size() == 1) {
                bases.push_back(bases.front());  // a single-terminal scheme sent twice
            } else if (bases.front().is_set) {
                bases.back() = bases.front();
            } else {
                for (auto& base : bases) {
                    try {
                        build_layered(g, base, plan.kp, plan.mode, pseed, honest_filler(), false);
                    } catch (const NoSuchProof&) {
                        base.members = {good.value_or(bases.front().members.front())};
                    }
                }
                bool duplicated = false;
                for (std::size_t i = 1; i < bases.size(); ++i) {
                    duplicated |= bases[i].members == bases[i - 1].members;
                }
                if (!duplicated) {
                    bases.back() = bases.front();
                }
                std::sort(bases.begin(), bases.end(),
                          [](const BaseSpec& x, const BaseSpec& y) { return x.members < y.members; });
            }
            if (good) {
                for (auto& base : bases) {
                    if (!base.is_set && plan.bases.size() == 1) {
                        base.members = {*good};
                    }
                }
            }
            for (std::size_t i = 0; i < bases.size(); ++i) {
                proof.blocks.push_back(build_layered(g, bases[i], plan.kp, plan.mode,
                                                     derive_seed(pseed, i), fill, false));
            }
        } else {
            for (std::size_t i = 0; i < plan.bases.size(); ++i) {
                proof.blocks.push_back(build_layered(g, plan.bases[i], plan.kp, plan.mode,
                                                     derive_seed(pseed, i), fill, !cheats_true));
            }
        }

        // Disclosure covers the support plus any slot the paths use.
        std::map<std::uint64_t, std::uint64_t> uses;
        for (const auto& block : proof.blocks) {
            for (const auto& group : block.groups) {
                for (const auto& path : group.paths) {
                    for (std::size_t i = 1; i < path.vertices.size(); ++i) {
                        if (path.vertices[i - 1] != path.vertices[i]) {
                            ++uses[edge_slot(path.vertices[i - 1], path.vertices[i])];
                        }
                    }
                }
            }
        }
        std::map<std::uint64_t, BigInt> disclosed(exact.freq.begin(), exact.freq.end());
        for (const auto& [slot, count] : uses) {
            disclosed.try_emplace(slot, BigInt(1));  // only reachable for fabricated edges
        }
        const BigInt scale = BigInt(n) * n;
        for (const auto& [slot, f] : disclosed) {
            const auto it = uses.find(slot);
            const std::uint64_t u = it == uses.end() ? 0 : it->second;
            proof.disclosure.push_back(DisclosureRecord{slot, f, sgt ? 0 : u});
            if (sgt) {
                const BigInt rest = scale * abs(f) - u;
                if (rest <= 0) {
                    throw std::logic_error("edge used more often than the n^2 scaling allows");
                }
                proof.residuals.push_back(ResidualRecord{slot, f > 0 ? rest : BigInt(-rest)});
            }
        }
        if (sgt) {
            for (auto& block : proof.blocks) {
                for (auto& group : block.groups) {
                    for (auto& path : group.paths) {
                        path.positive.clear();
                        for (std::size_t i = 1; i < path.vertices.size(); ++i) {
                            const auto it = disclosed.find(edge_slot(path.vertices[i - 1], path.vertices[i]));
                            path.positive.push_back(it == disclosed.end() || it->second > 0);
                        }
                    }
                }
            }
        }
    }

    if (b == ProverBehavior::MultiplicityLie && !proof.disclosure.empty()) {
        auto& rec = proof.disclosure.front();
        rec.freq += (rec.freq == -1) ? 2 : 1;
    }
    if (b == ProverBehavior::SignLie) {
        bool flipped = false;
        if (sgt) {
            for (auto& block : proof.blocks) {
                for (auto& group : block.groups) {
                    for (auto& path : group.paths) {
                        if (!flipped && !path.positive.empty()) {
                            path.positive.front() = !path.positive.front();
                            flipped = true;
                        }
                    }
                }
            }
        }
        if (!flipped && !proof.disclosure.empty()) {
            proof.disclosure.front().freq = -proof.disclosure.front().freq;
        }
    }
    return proof;
}

// ---- encoding ------------------------------------------------------------

namespace {

void emit(std::vector<std::uint8_t>& out, FrameKind kind, const std::vector<std::uint8_t>& payload) {
    out.push_back(static_cast<std::uint8_t>(kind));
    const auto len = static_cast<std::uint32_t>(payload.size());
    for (int i = 0; i < 4; ++i) {
        out.push_back(static_cast<std::uint8_t>(len >> (8 * i)));
    }
    out.insert(out.end(), payload.begin(), payload.end());
}

template <class Range>
std::vector<std::uint8_t> id_list(const Range& ids) {
    std::vector<std::uint8_t> p;
    wire::put_varint(p, ids.size());
    for (auto id : ids) {
        wire::put_varint(p, id);
    }
    return p;
}

}  // namespace

std::vector<std::uint8_t> encode_proof(const Proof& proof) {
    using wire::put_varint;
    std::vector<std::uint8_t> out;
    std::vector<std::uint8_t> p;

    p = {static_cast<std::uint8_t>(proof.scheme), static_cast<std::uint8_t>(proof.mode == PathMode::Edge)};
    put_varint(p, proof.k);
    put_varint(p, proof.n);
    p.push_back(proof.claim ? 1 : 0);
    emit(out, FrameKind::Header, p);

    if (proof.cut) {
        if (proof.cut->mode == PathMode::Vertex) {
            emit(out, FrameKind::CutSeparator, id_list(proof.cut->separator));
        } else {
            emit(out, FrameKind::CutEdges, id_list(proof.cut->cut_edges));
        }
        emit(out, FrameKind::CutSide, id_list(proof.cut->side));
    }
    for (const auto& rec : proof.disclosure) {
        p.clear();
        put_varint(p, rec.slot);
        append_bigint(p, rec.freq);
        put_varint(p, rec.uses);
        emit(out, FrameKind::Disclosure, p);
    }
    emit(out, FrameKind::DisclosureEnd, {});

    const bool signs = proof.scheme == SchemeId::Sgt;
    for (const auto& block : proof.blocks) {
        if (block.base_is_set) {
            p = id_list(block.base);
            wire::put_u64(p, block.layer_seed);
            emit(out, FrameKind::TerminalSet, p);
        } else {
            p.clear();
            put_varint(p, block.base.front());
            wire::put_u64(p, block.layer_seed);
            emit(out, FrameKind::TerminalBegin, p);
        }
        for (const auto& group : block.groups) {
            p.clear();
            put_varint(p, group.v);
            emit(out, FrameKind::VertexBegin, p);
            emit(out, FrameKind::DisjointList, id_list(group.disjoint_list));
            for (const auto& path : group.paths) {
                p = id_list(path.vertices);
                if (signs) {
                    std::vector<std::uint8_t> bits((path.positive.size() + 7) / 8, 0);
                    for (std::size_t i = 0; i < path.positive.size(); ++i) {
                        if (path.positive[i]) {
                            bits[i / 8] |= static_cast<std::uint8_t>(1U << (i % 8));
                        }
                    }
                    p.insert(p.end(), bits.begin(), bits.end());
                }
                emit(out, FrameKind::Path, p);
            }
            emit(out, FrameKind::VertexEnd, {});
        }
        emit(out, FrameKind::TerminalEnd, {});
    }
    if (signs && proof.claim) {
        for (const auto& rec : proof.residuals) {
            p.clear();
            put_varint(p, rec.slot);
            append_bigint(p, rec.amount);
            emit(out, FrameKind::Residual, p);
        }
        emit(out, FrameKind::ResidualEnd, {});
    }
    emit(out, FrameKind::Verdict, {static_cast<std::uint8_t>(proof.claim ? 1 : 0)});
    return out;
}

std::optional<FrameView> FrameReader::next() {
    if (offset_ == bytes_.size()) {
        return std::nullopt;
    }
    if (offset_ + 5 > bytes_.size()) {
        throw std::invalid_argument("truncated frame header");
    }
    const auto kind = static_cast<FrameKind>(bytes_[offset_]);
    std::uint32_t len = 0;
    for (int i = 0; i < 4; ++i) {
        len |= std::uint32_t{bytes_[offset_ + 1 + i]} << (8 * i);
    }
    offset_ += 5;
    if (len > bytes_.size() - offset_) {
        throw std::invalid_argument("truncated frame payload");
    }
    FrameView view{kind, bytes_.subspan(offset_, len)};
    offset_ += len;
    return view;
}

}  // namespace sgt
