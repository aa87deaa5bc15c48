#include <algorithm>
#include <numeric>
#include <sstream>

#include "sgt/annotated.hpp"
#include "sgt/random.hpp"
#include "wire.hpp"

namespace sgt {

SketchShape verifier_shape(std::uint64_t universe) {
    return SketchShape::custom(std::max<std::uint64_t>(universe, 1), 2, 3);
}

namespace {

/// Raised inside frame handlers; turned into a REJECT verdict.
struct Rejection {
    std::string reason;
};

[[noreturn]] void reject(const std::string& reason) { throw Rejection{reason}; }

void require(bool ok, const char* reason) {
    if (!ok) {
        reject(reason);
    }
}

enum class Phase { Header, Cut, Disclosure, Blocks, InBlock, InVertex, Residuals, Verdict, Done };

constexpr std::size_t kScalarBits = 32 * 64;
constexpr std::size_t kFrameHeaderBits = 5 * 8;

}  // namespace

struct Verifier::State {
    VerifierConfig cfg;
    std::uint32_t n = 0;
    std::uint64_t slots = 0;
    PathMode mode = PathMode::Vertex;
    std::uint32_t kp = 1;
    bool signs = false;

    EqualitySketch input;  // E: stream minus disclosed frequencies
    std::optional<EqualitySketch> uses;      // U (dynamic) or U+ (SGT)
    std::optional<EqualitySketch> negative;  // U- (SGT)
    std::optional<EqualitySketch> disjoint;  // D, reset per vertex

    Phase phase = Phase::Header;
    bool claim = false;
    std::optional<std::string> rejected;

    // Cut branch.
    std::vector<char> in_side;
    std::vector<char> in_separator;
    std::vector<std::uint64_t> cut_edges;
    std::size_t cut_edges_seen = 0;
    bool saw_separator = false;

    // Disclosure and residual order.
    std::optional<std::uint64_t> last_slot;

    // Blocks.
    std::vector<Vertex> am_list;
    std::vector<Vertex> base;  // current block's terminal or set
    bool base_is_set = false;
    std::uint64_t layer_seed = 0;
    std::uint32_t blocks_done = 0;
    std::optional<Vertex> last_terminal;
    std::optional<Vertex> last_vertex;
    Vertex current = 0;
    std::uint32_t current_layer = 0;
    std::uint32_t paths_seen = 0;
    bool saw_list = false;

    std::size_t peak_frame_bits = 0;

    explicit State(const VerifierConfig& c)
        : cfg(c),
          n(c.n),
          slots(slot_count(c.n)),
          input(verifier_shape(slot_count(c.n)), derive_seed(c.seed, 0xe0)) {
        switch (c.scheme) {
            case SchemeId::KVConn:
            case SchemeId::AM:
                mode = PathMode::Vertex;
                break;
            case SchemeId::KEConn:
                mode = PathMode::Edge;
                break;
            case SchemeId::Gap:
                mode = PathMode::Vertex;
                break;
            case SchemeId::Sgt:
                mode = c.mode;
                signs = true;
                break;
        }
        if (c.k == 0) {
            throw std::invalid_argument("k must be positive");
        }
        if (mode == PathMode::Vertex && c.k >= c.n && c.block_count_override == 0) {
            throw std::invalid_argument("vertex-connectivity schemes need 1 <= k < n");
        }
        kp = (c.scheme == SchemeId::Gap && c.n >= 4 * c.k) ? 2 * c.k : c.k;
        if (c.scheme == SchemeId::AM) {
            am_list = am_terminals(c.n, c.public_seed);
        }
    }

    bool gap_sets() const { return cfg.scheme == SchemeId::Gap && n >= 4 * cfg.k && cfg.block_count_override == 0; }

    std::uint32_t expected_blocks() const {
        if (cfg.block_count_override != 0) {
            return cfg.block_count_override;
        }
        if (gap_sets()) {
            return 2;
        }
        if (cfg.scheme == SchemeId::AM) {
            return static_cast<std::uint32_t>(am_list.size());
        }
        return mode == PathMode::Edge ? 1 : cfg.k;
    }

    bool is_base(Vertex v) const { return std::binary_search(base.begin(), base.end(), v); }
    bool single_terminal(Vertex v) const { return !base_is_set && base.front() == v; }
    bool is_target(Vertex w) const { return is_base(w) || layer_of(layer_seed, w, n, kp) < current_layer; }

    std::uint64_t check_slot(std::uint64_t slot) const {
        require(slot < slots, "slot-range");
        return slot;
    }

    std::vector<std::uint64_t> read_ids(wire::Cursor& c, std::uint64_t bound, std::size_t max_count) const {
        const std::uint64_t count = c.varint();
        require(count <= max_count, "list-size");
        std::vector<std::uint64_t> ids;
        ids.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i) {
            const std::uint64_t id = c.varint();
            require(id < bound, "id-range");
            require(ids.empty() || id > ids.back(), "list-order");
            ids.push_back(id);
        }
        return ids;
    }

    void on_header(wire::Cursor& c) {
        const auto scheme = c.u8();
        const auto edge = c.u8();
        const auto k = c.varint();
        const auto nn = c.varint();
        const auto claim_byte = c.u8();
        c.expect_done();
        require(scheme == static_cast<std::uint8_t>(cfg.scheme), "header");
        require(edge == (mode == PathMode::Edge ? 1 : 0), "header");
        require(k == cfg.k && nn == n && claim_byte <= 1, "header");
        claim = claim_byte == 1;
        if (claim) {
            const SketchShape shape = verifier_shape(slots);
            uses.emplace(shape, derive_seed(cfg.seed, 0x05e));
            if (signs) {
                negative.emplace(shape, derive_seed(cfg.seed, 0x5e9));
            }
            disjoint.emplace(verifier_shape(mode == PathMode::Vertex ? n : slots), derive_seed(cfg.seed, 0xd15));
            phase = Phase::Disclosure;
        } else {
            in_side.assign(n, 0);
            if (mode == PathMode::Vertex) {
                in_separator.assign(n, 0);
            }
            phase = Phase::Cut;
        }
    }

    void on_cut(FrameKind kind, wire::Cursor& c) {
        if (kind == FrameKind::CutSeparator && mode == PathMode::Vertex && !saw_separator) {
            for (auto x : read_ids(c, n, cfg.k - 1)) {
                in_separator[x] = 1;
            }
            c.expect_done();
            saw_separator = true;
            return;
        }
        if (kind == FrameKind::CutEdges && mode == PathMode::Edge && !saw_separator) {
            cut_edges = read_ids(c, slots, cfg.k - 1);
            c.expect_done();
            saw_separator = true;
            return;
        }
        require(kind == FrameKind::CutSide && saw_separator, "order");
        const auto side = read_ids(c, n, n);
        c.expect_done();
        require(!side.empty(), "cut-shape");
        std::size_t separator_size = 0;
        for (auto s : side) {
            require(mode == PathMode::Edge || !in_separator[s], "cut-shape");
            in_side[s] = 1;
        }
        if (mode == PathMode::Vertex) {
            separator_size = static_cast<std::size_t>(std::count(in_separator.begin(), in_separator.end(), 1));
        }
        require(side.size() + separator_size < n, "cut-shape");
        phase = Phase::Disclosure;
    }

    void on_disclosure(wire::Cursor& c) {
        const std::uint64_t slot = check_slot(c.varint());
        const BigInt freq = c.bigint();
        const std::uint64_t u = c.varint();
        c.expect_done();
        require(!last_slot || slot > *last_slot, "disclosure-order");
        require(freq != 0, "disclosure-zero");
        last_slot = slot;
        input.erase(slot, freq);
        if (!claim) {
            const auto [a, b] = slot_endpoints(slot);
            if (mode == PathMode::Edge) {
                require(cut_edges_seen == cut_edges.size() || cut_edges[cut_edges_seen] >= slot,
                        "cut-edge-undisclosed");
                if (cut_edges_seen < cut_edges.size() && cut_edges[cut_edges_seen] == slot) {
                    ++cut_edges_seen;
                    return;
                }
                require(in_side[a] == in_side[b], "disallowed-edge");
            } else {
                require(in_side[a] == in_side[b] || in_separator[a] || in_separator[b], "disallowed-edge");
            }
            return;
        }
        if (signs) {
            const BigInt scaled = BigInt(n) * n * abs(freq);
            (freq > 0 ? *uses : *negative).insert(slot, scaled);
        } else if (u != 0) {
            uses->insert(slot, BigInt(u));
        }
    }

    void on_disclosure_end(wire::Cursor& c) {
        c.expect_done();
        require(multiset_equal(input), "input-mismatch");
        if (!claim) {
            require(mode == PathMode::Vertex || cut_edges_seen == cut_edges.size(), "cut-edge-undisclosed");
            phase = Phase::Verdict;
        } else {
            phase = Phase::Blocks;
        }
        last_slot.reset();
    }

    void on_block_begin(FrameKind kind, wire::Cursor& c) {
        require(blocks_done < expected_blocks(), "terminals");
        const bool override_mode = cfg.block_count_override != 0;
        if (kind == FrameKind::TerminalBegin) {
            require(!gap_sets(), "terminals");
            const std::uint64_t t = c.varint();
            require(t < n, "id-range");
            layer_seed = c.u64();
            c.expect_done();
            if (cfg.scheme == SchemeId::AM && !override_mode) {
                require(t == am_list[blocks_done], "terminals");
            } else if (mode == PathMode::Vertex || override_mode) {
                require(!last_terminal || t > *last_terminal, "terminals");
            }
            last_terminal = static_cast<Vertex>(t);
            base = {static_cast<Vertex>(t)};
            base_is_set = false;
        } else {
            require(gap_sets() || (override_mode && mode == PathMode::Vertex), "terminals");
            const auto ids = read_ids(c, n, n);
            layer_seed = c.u64();
            c.expect_done();
            require(!ids.empty() && ids.size() < n, "terminals");
            if (gap_sets()) {
                const std::uint64_t start = std::uint64_t{blocks_done} * 2 * cfg.k;
                require(ids.size() == 2 * cfg.k, "terminals");
                for (std::size_t i = 0; i < ids.size(); ++i) {
                    require(ids[i] == start + i, "terminals");
                }
            }
            base.assign(ids.begin(), ids.end());
            base_is_set = true;
        }
        last_vertex.reset();
        phase = Phase::InBlock;
    }

    void require_skipped_are_base(std::uint64_t from, std::uint64_t to) const {
        for (std::uint64_t w = from; w < to; ++w) {
            require(is_base(static_cast<Vertex>(w)), "vertex-missing");
        }
    }

    void on_vertex_begin(wire::Cursor& c) {
        const std::uint64_t v = c.varint();
        c.expect_done();
        require(v < n, "id-range");
        require(!last_vertex || v > *last_vertex, "vertex-order");
        require_skipped_are_base(last_vertex ? *last_vertex + 1 : 0, v);
        require(!is_base(static_cast<Vertex>(v)), "vertex-order");
        current = static_cast<Vertex>(v);
        last_vertex = current;
        current_layer = layer_of(layer_seed, current, n, kp);
        paths_seen = 0;
        saw_list = false;
        disjoint->reset();
        phase = Phase::InVertex;
    }

    void on_disjoint_list(wire::Cursor& c) {
        require(!saw_list && paths_seen == 0, "order");
        const std::uint64_t bound = mode == PathMode::Vertex ? n : slots;
        const std::uint64_t count = c.varint();
        require(count <= bound, "list-size");
        std::optional<std::uint64_t> prev;
        for (std::uint64_t i = 0; i < count; ++i) {
            const std::uint64_t id = c.varint();
            require(id < bound, "id-range");
            require(!prev || id > *prev, "disjointness-order");
            prev = id;
            disjoint->insert(id);
        }
        c.expect_done();
        saw_list = true;
    }

    void on_path(wire::Cursor& c, std::size_t& path_length) {
        require(saw_list, "order");
        require(paths_seen < kp, "path-count");
        const std::uint64_t count = c.varint();
        require(count >= 2 && count <= std::uint64_t{n} * n + 1, "path-shape");
        std::vector<Vertex> p;
        p.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i) {
            const std::uint64_t w = c.varint();
            require(w < n, "id-range");
            p.push_back(static_cast<Vertex>(w));
        }
        std::vector<std::uint8_t> sign_bits;
        if (signs) {
            sign_bits.resize((count - 1 + 7) / 8);
            for (auto& byte : sign_bits) {
                byte = c.u8();
            }
            if ((count - 1) % 8 != 0) {
                require((sign_bits.back() >> ((count - 1) % 8)) == 0, "path-shape");
            }
        }
        c.expect_done();

        require(p.front() == current, "path-shape");
        for (std::size_t i = 1; i < p.size(); ++i) {
            require(p[i] != p[i - 1], "path-shape");
            require(p[i] != current, "path-shape");
            const bool last = i + 1 == p.size();
            if (!last) {
                require(!single_terminal(p[i]), "path-shape");
                require(!is_target(p[i]), "path-target");
            }
            const std::uint64_t slot = edge_slot(p[i - 1], p[i]);
            if (mode == PathMode::Vertex) {
                if (!single_terminal(p[i])) {
                    disjoint->erase(p[i]);
                }
            } else {
                disjoint->erase(slot);
            }
            if (signs) {
                const bool positive = (sign_bits[(i - 1) / 8] >> ((i - 1) % 8)) & 1U;
                (positive ? *uses : *negative).erase(slot);
            } else {
                uses->erase(slot);
            }
        }
        require(is_target(p.back()), "path-target");
        path_length += p.size() - 1;
        ++paths_seen;
    }

    void on_vertex_end(wire::Cursor& c) {
        c.expect_done();
        require(paths_seen == kp, "path-count");
        require(multiset_equal(*disjoint), "disjointness");
        phase = Phase::InBlock;
    }

    void on_block_end(wire::Cursor& c) {
        c.expect_done();
        require_skipped_are_base(last_vertex ? *last_vertex + 1 : 0, n);
        ++blocks_done;
        phase = Phase::Blocks;
    }

    void close_blocks() {
        require(blocks_done == expected_blocks(), "terminals");
        if (!signs) {
            require(multiset_equal(*uses), "edge-usage");
        }
    }

    void on_residual(wire::Cursor& c) {
        const std::uint64_t slot = check_slot(c.varint());
        const BigInt amount = c.bigint();
        c.expect_done();
        require(!last_slot || slot > *last_slot, "residual-order");
        require(amount != 0, "residual-zero");
        last_slot = slot;
        if (amount > 0) {
            uses->erase(slot, amount);
        } else {
            negative->erase(slot, -amount);
        }
    }

    void on_residual_end(wire::Cursor& c) {
        c.expect_done();
        require(multiset_equal(*uses) && multiset_equal(*negative), "edge-usage");
        phase = Phase::Verdict;
    }

    void on_verdict(wire::Cursor& c) {
        const auto value = c.u8();
        c.expect_done();
        require(value == (claim ? 1 : 0), "verdict");
        phase = Phase::Done;
    }

    void receive(const FrameView& frame, std::size_t& path_length) {
        peak_frame_bits = std::max(peak_frame_bits, frame.payload.size() * 8 + kFrameHeaderBits);
        wire::Cursor c(frame.payload);
        const FrameKind kind = frame.kind;
        switch (phase) {
            case Phase::Header:
                require(kind == FrameKind::Header, "order");
                on_header(c);
                return;
            case Phase::Cut:
                on_cut(kind, c);
                return;
            case Phase::Disclosure:
                if (kind == FrameKind::Disclosure) {
                    on_disclosure(c);
                } else {
                    require(kind == FrameKind::DisclosureEnd, "order");
                    on_disclosure_end(c);
                }
                return;
            case Phase::Blocks:
                if (kind == FrameKind::TerminalBegin || kind == FrameKind::TerminalSet) {
                    on_block_begin(kind, c);
                    return;
                }
                close_blocks();
                if (signs) {
                    phase = Phase::Residuals;
                    receive(frame, path_length);
                    return;
                }
                require(kind == FrameKind::Verdict, "order");
                on_verdict(c);
                return;
            case Phase::InBlock:
                if (kind == FrameKind::VertexBegin) {
                    on_vertex_begin(c);
                } else {
                    require(kind == FrameKind::TerminalEnd, "order");
                    on_block_end(c);
                }
                return;
            case Phase::InVertex:
                if (kind == FrameKind::DisjointList) {
                    on_disjoint_list(c);
                } else if (kind == FrameKind::Path) {
                    on_path(c, path_length);
                } else {
                    require(kind == FrameKind::VertexEnd, "order");
                    on_vertex_end(c);
                }
                return;
            case Phase::Residuals:
                if (kind == FrameKind::Residual) {
                    on_residual(c);
                } else {
                    require(kind == FrameKind::ResidualEnd, "order");
                    on_residual_end(c);
                }
                return;
            case Phase::Verdict:
                require(kind == FrameKind::Verdict, "order");
                on_verdict(c);
                return;
            case Phase::Done:
                reject("trailing-frame");
        }
    }

    std::size_t vcost() const {
        std::size_t bits = input.state_bits() + kScalarBits + peak_frame_bits;
        for (const auto* s : {&uses, &negative, &disjoint}) {
            if (s->has_value()) {
                bits += (*s)->state_bits();
            }
        }
        bits += in_side.size() + in_separator.size() + cut_edges.size() * 64;
        bits += am_list.size() * 32 + (base_is_set ? base.size() * 32 : 0);
        return bits;
    }

    std::size_t peak_vcost = 0;
    std::size_t path_length = 0;
};

Verifier::Verifier(const VerifierConfig& config) : s_(std::make_unique<State>(config)) {}
Verifier::~Verifier() = default;
Verifier::Verifier(Verifier&&) noexcept = default;

void Verifier::ingest(const StreamToken& token) {
    if (token.kind != StreamToken::Kind::Edge) {
        throw std::invalid_argument("annotated schemes take edge streams");
    }
    if (token.v >= s_->n) {
        throw std::out_of_range("edge endpoint outside the vertex range");
    }
    s_->input.insert(edge_slot(token.u, token.v), token.delta);
}

void Verifier::receive(const FrameView& frame) {
    if (s_->rejected) {
        return;
    }
    try {
        s_->receive(frame, s_->path_length);
    } catch (const Rejection& r) {
        s_->rejected = r.reason;
    } catch (const std::exception&) {
        s_->rejected = "malformed";
    }
    s_->peak_vcost = std::max(s_->peak_vcost, s_->vcost());
}

Verdict Verifier::finish() {
    Verdict v;
    if (s_->rejected) {
        v.reason = *s_->rejected;
    } else if (s_->phase != Phase::Done) {
        v.reason = "truncated";
    } else {
        v.kind = VerdictKind::Accept;
        v.output = s_->claim;
    }
    return v;
}

std::size_t Verifier::vcost_bits() const { return std::max(s_->peak_vcost, s_->vcost()); }

// ---- harness -------------------------------------------------------------

std::string ProofTranscript::costs_line() const {
    std::ostringstream out;
    out << "{\"scheme\": \"" << scheme_name(scheme) << "\", \"k\": " << k << ", \"n\": " << n
        << ", \"hcost_bits\": " << hcost_bits << ", \"vcost_bits\": " << vcost_bits << ", \"verdict\": \"";
    if (verdict.kind == VerdictKind::Reject) {
        out << "REJECT";
    } else {
        out << "OUTPUT(" << (verdict.output ? "true" : "false") << ")";
    }
    out << "\"}";
    return out.str();
}

namespace {

std::uint32_t stream_vertices(const Stream& stream) {
    if (stream.header.model != StreamModel::Sgt) {
        throw std::invalid_argument("annotated schemes take edge streams");
    }
    return static_cast<std::uint32_t>(stream.header.universe);
}

ProofTranscript run_verifier(const Stream& stream, std::span<const std::uint8_t> bytes,
                             const VerifierConfig& config) {
    Verifier verifier(config);
    for (const auto& token : stream.tokens) {
        verifier.ingest(token);
    }
    ProofTranscript t;
    t.scheme = config.scheme;
    t.k = config.k;
    t.n = config.n;
    t.hcost_bits = bytes.size() * 8;
    FrameReader reader(bytes);
    std::size_t block_length = 0;
    try {
        while (auto frame = reader.next()) {
            ++t.frames;
            const std::size_t frame_bits = (frame->payload.size() + 5) * 8;
            switch (frame->kind) {
                case FrameKind::Header:
                    if (frame->payload.size() >= 2) {
                        t.claim = frame->payload.back() == 1;
                    }
                    break;
                case FrameKind::Disclosure:
                case FrameKind::DisclosureEnd:
                case FrameKind::Residual:
                case FrameKind::ResidualEnd:
                    t.disclosure_bits += frame_bits;
                    break;
                case FrameKind::TerminalBegin:
                case FrameKind::TerminalSet:
                    block_length = 0;
                    break;
                case FrameKind::Path:
                    if (!frame->payload.empty()) {
                        wire::Cursor c(frame->payload);
                        const auto count = c.varint();
                        block_length += count == 0 ? 0 : count - 1;
                        t.max_layered_length = std::max(t.max_layered_length, block_length);
                    }
                    break;
                default:
                    break;
            }
            verifier.receive(*frame);
        }
    } catch (const std::exception&) {
        // Unframeable trailing bytes.
        t.verdict = Verdict{VerdictKind::Reject, false, "malformed"};
        t.vcost_bits = verifier.vcost_bits();
        return t;
    }
    t.verdict = verifier.finish();
    t.vcost_bits = verifier.vcost_bits();
    return t;
}

}  // namespace

ProofTranscript verify_proof(const Stream& stream, std::span<const std::uint8_t> proof_bytes,
                             const VerifierConfig& config) {
    VerifierConfig cfg = config;
    cfg.n = stream_vertices(stream);
    return run_verifier(stream, proof_bytes, cfg);
}

ProofTranscript run_protocol(const Stream& stream, SchemeId scheme, ProverBehavior behavior,
                             std::uint64_t seed, const ProtocolOptions& options) {
    VerifierConfig vc;
    vc.scheme = scheme;
    vc.k = options.k;
    vc.n = stream_vertices(stream);
    vc.mode = options.mode;
    vc.seed = derive_seed(seed, 0x7e1);
    vc.public_seed = options.public_seed;

    ProverConfig pc;
    pc.scheme = scheme;
    pc.k = options.k;
    pc.mode = options.mode;
    pc.seed = derive_seed(seed, 0x960);
    pc.public_seed = options.public_seed;
    pc.behavior = behavior;

    const Proof proof = prove(stream, pc);
    const auto bytes = encode_proof(proof);
    ProofTranscript t = run_verifier(stream, bytes, vc);
    t.claim = proof.claim;
    t.max_layered_length = 0;
    t.max_retries = 0;
    for (const auto& block : proof.blocks) {
        t.max_layered_length = std::max(t.max_layered_length, block.total_length());
        t.max_retries = std::max(t.max_retries, block.retries);
    }
    return t;
}

ProofTranscript scheme_kvconn(const Stream& s, std::uint32_t k, std::uint64_t seed, ProverBehavior b) {
    return run_protocol(s, SchemeId::KVConn, b, seed, ProtocolOptions{k, PathMode::Vertex, 0});
}

ProofTranscript scheme_keconn(const Stream& s, std::uint32_t k, std::uint64_t seed, ProverBehavior b) {
    return run_protocol(s, SchemeId::KEConn, b, seed, ProtocolOptions{k, PathMode::Edge, 0});
}

ProofTranscript scheme_gap_vconn(const Stream& s, std::uint32_t k, std::uint64_t seed, ProverBehavior b) {
    return run_protocol(s, SchemeId::Gap, b, seed, ProtocolOptions{k, PathMode::Vertex, 0});
}

ProofTranscript scheme_am_vconn(const Stream& s, std::uint32_t k, std::uint64_t shared_seed,
                                ProverBehavior b) {
    // The public coins are fixed before the prover composes anything.
    const std::uint64_t public_seed = derive_seed(shared_seed, 0xa11);
    return run_protocol(s, SchemeId::AM, b, shared_seed, ProtocolOptions{k, PathMode::Vertex, public_seed});
}

ProofTranscript scheme_sgt(const Stream& s, std::uint32_t k, PathMode mode, std::uint64_t seed,
                           ProverBehavior b) {
    return run_protocol(s, SchemeId::Sgt, b, seed, ProtocolOptions{k, mode, 0});
}

Verdict verify_not_k_connected(const Stream& stream, const CutProof& cut, std::uint32_t k,
                               std::uint64_t seed) {
    const ExactGraph exact = exact_support(stream);
    Proof proof;
    proof.scheme = cut.mode == PathMode::Vertex ? SchemeId::KVConn : SchemeId::KEConn;
    proof.mode = cut.mode;
    proof.k = k;
    proof.n = exact.n;
    proof.claim = false;
    proof.cut = cut;
    for (const auto& [slot, f] : exact.freq) {
        proof.disclosure.push_back(DisclosureRecord{slot, f, 0});
    }
    VerifierConfig vc;
    vc.scheme = proof.scheme;
    vc.k = k;
    vc.n = exact.n;
    vc.seed = seed;
    vc.block_count_override = 1;  // waives the k < n requirement
    const auto bytes = encode_proof(proof);
    return run_verifier(stream, bytes, vc).verdict;
}

Verdict layering_verify(const Stream& stream, const LayeredProof& layered, std::uint32_t k,
                        std::uint64_t seed) {
    const ExactGraph exact = exact_support(stream);
    Proof proof;
    proof.scheme = layered.mode == PathMode::Vertex ? SchemeId::KVConn : SchemeId::KEConn;
    proof.mode = layered.mode;
    proof.k = k;
    proof.n = exact.n;
    proof.claim = true;
    proof.blocks = {layered};
    std::map<std::uint64_t, std::uint64_t> uses;
    for (const auto& group : layered.groups) {
        for (const auto& path : group.paths) {
            for (std::size_t i = 1; i < path.vertices.size(); ++i) {
                if (path.vertices[i - 1] != path.vertices[i]) {
                    ++uses[edge_slot(path.vertices[i - 1], path.vertices[i])];
                }
            }
        }
    }
    std::map<std::uint64_t, BigInt> disclosed(exact.freq.begin(), exact.freq.end());
    for (const auto& [slot, count] : uses) {
        disclosed.try_emplace(slot, BigInt(1));
    }
    for (const auto& [slot, f] : disclosed) {
        const auto it = uses.find(slot);
        proof.disclosure.push_back(DisclosureRecord{slot, f, it == uses.end() ? 0 : it->second});
    }
    VerifierConfig vc;
    vc.scheme = proof.scheme;
    vc.k = k;
    vc.n = exact.n;
    vc.seed = seed;
    vc.block_count_override = 1;
    const auto bytes = encode_proof(proof);
    return run_verifier(stream, bytes, vc).verdict;
}

}  // namespace sgt
