#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgt/bigint.hpp"
#include "sgt/graph.hpp"
#include "sgt/l0_sketch.hpp"
#include "sgt/oracles.hpp"
#include "sgt/stream.hpp"

namespace sgt {

enum class SchemeId : std::uint8_t { KVConn = 1, KEConn = 2, Gap = 3, AM = 4, Sgt = 5 };

const char* scheme_name(SchemeId id);
/// Accepts "kvconn", "keconn", "gap", "am", "sgt". Throws std::invalid_argument otherwise.
SchemeId parse_scheme(const std::string& name);

enum class ProverBehavior {
    Honest,
    EdgeNotInInput,       // claims true, fills missing paths with edges the input lacks
    MultiplicityLie,      // one disclosed frequency is off
    SignLie,              // one path edge carries the wrong sign (or one disclosed sign is flipped)
    NonDisjoint,          // claims true, fills missing paths by repeating paths
    BrokenPath,           // claims true, fills missing paths with walks that stop short
    UndersizedCut,        // claims false with a cut whose crossing edges are left undisclosed
    TerminalDuplication,  // claims true, repeats a terminal that has a valid proof
};

const char* behavior_name(ProverBehavior b);
ProverBehavior parse_behavior(const std::string& name);
std::vector<ProverBehavior> tamper_classes();

/// Thrown by honest provers asked to prove something false.
class NoSuchProof : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- proof content -------------------------------------------------------

struct PathProof {
    std::vector<Vertex> vertices;
    /// One entry per edge in the SGT scheme: true for a positive frequency.
    std::vector<bool> positive;

    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

struct VertexGroup {
    Vertex v = 0;
    /// Vertex mode: path vertices other than v and a single terminal; edge mode:
    /// edge slots. Strictly increasing.
    std::vector<std::uint64_t> disjoint_list;
    std::vector<PathProof> paths;
};

/// Proof that every non-base vertex has `paths_per_vertex` disjoint paths to the base
/// (a single terminal, or a terminal set reached through a virtual apex).
struct LayeredProof {
    PathMode mode = PathMode::Vertex;
    std::vector<Vertex> base;  // one terminal, or the sorted terminal set
    bool base_is_set = false;
    std::uint32_t paths_per_vertex = 1;
    std::uint64_t layer_seed = 0;
    std::uint32_t retries = 0;  // layer seeds rejected before this one
    std::vector<VertexGroup> groups;

    std::size_t total_length() const;
};

struct CutProof {
    PathMode mode = PathMode::Vertex;
    std::vector<Vertex> separator;        // X (vertex mode)
    std::vector<std::uint64_t> cut_edges;  // edge slots (edge mode)
    std::vector<Vertex> side;             // S
};

struct DisclosureRecord {
    std::uint64_t slot = 0;
    BigInt freq;
    std::uint64_t uses = 0;  // dynamic schemes only
};

struct ResidualRecord {
    std::uint64_t slot = 0;
    BigInt amount;  // sign selects the positive or negative ledger
};

struct Proof {
    SchemeId scheme = SchemeId::KVConn;
    PathMode mode = PathMode::Vertex;
    std::uint32_t k = 1;
    std::uint32_t n = 0;
    bool claim = false;
    std::optional<CutProof> cut;
    std::vector<DisclosureRecord> disclosure;
    std::vector<LayeredProof> blocks;
    std::vector<ResidualRecord> residuals;
};

// ---- layering ------------------------------------------------------------

/// ceil(log2(n / k)), at least 0.
std::uint32_t layer_count(std::uint32_t n, std::uint32_t k);
/// Smallest i with v in T_i = T_i^L u T_i^R (each sampled at rate min(1, k 2^i / n)).
std::uint32_t layer_of(std::uint64_t layer_seed, Vertex v, std::uint32_t n, std::uint32_t k);
/// 16 k n ceil(log2(n/k)) in vertex mode, 16 k^2 n ceil(log2(n/k)) in edge mode
/// (the logarithm is taken as at least 1).
std::size_t layered_size_bound(std::uint32_t n, std::uint32_t k, PathMode mode);

constexpr std::uint32_t kMaxLayerRetries = 64;

/// Honest layered proof for a single terminal. Throws NoSuchProof if some vertex
/// lacks k disjoint paths, std::runtime_error if 64 layer seeds all exceed the bound.
LayeredProof layering_prove(const Graph& g, Vertex terminal, std::uint32_t k, PathMode mode,
                            std::uint64_t seed);
/// Same with a terminal set as the base (paths end at distinct set members in vertex mode).
LayeredProof layering_prove_set(const Graph& g, const std::vector<Vertex>& terminals,
                                std::uint32_t k, PathMode mode, std::uint64_t seed);

/// Oracle-found minimum cut. Throws NoSuchProof if the graph is k-connected in mode.
CutProof prove_not_k_connected(const Graph& g, std::uint32_t k, PathMode mode);

// ---- framing -------------------------------------------------------------

enum class FrameKind : std::uint8_t {
    Header = 1,
    CutSeparator = 2,
    CutEdges = 3,
    CutSide = 4,
    Disclosure = 5,
    DisclosureEnd = 6,
    TerminalBegin = 7,
    TerminalSet = 8,
    VertexBegin = 9,
    DisjointList = 10,
    Path = 11,
    VertexEnd = 12,
    TerminalEnd = 13,
    Residual = 14,
    ResidualEnd = 15,
    Verdict = 16,
};

/// Frames are a one-byte kind, a little-endian u32 payload length and the payload.
std::vector<std::uint8_t> encode_proof(const Proof& proof);

struct FrameView {
    FrameKind kind;
    std::span<const std::uint8_t> payload;
};

/// Splits a proof byte string into frames. Throws std::invalid_argument on truncation.
class FrameReader {
public:
    explicit FrameReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}
    std::optional<FrameView> next();

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t offset_ = 0;
};

// ---- verifier ------------------------------------------------------------

struct VerifierConfig {
    SchemeId scheme = SchemeId::KVConn;
    std::uint32_t k = 1;
    std::uint32_t n = 0;
    PathMode mode = PathMode::Vertex;  // only consulted by the SGT scheme
    std::uint64_t seed = 0;            // private sketch randomness
    std::uint64_t public_seed = 0;     // AM terminal sampling
    /// Number of layered blocks required in the connected branch; 0 keeps the
    /// scheme's own rule (and its terminal constraints).
    std::uint32_t block_count_override = 0;
};

enum class VerdictKind { Accept, Reject };

struct Verdict {
    VerdictKind kind = VerdictKind::Reject;
    bool output = false;  // meaningful when accepted
    std::string reason;   // check id on rejection
};

/// Streaming verifier: ingest the input stream, then feed proof frames one at a
/// time. Working state is a few equality sketches and O(1) scalars, plus the cut
/// side bitmap in the not-connected branch.
class Verifier {
public:
    explicit Verifier(const VerifierConfig& config);
    ~Verifier();
    Verifier(Verifier&&) noexcept;

    void ingest(const StreamToken& token);
    void receive(const FrameView& frame);
    /// Final verdict; REJECT if the proof ended early or any check failed.
    Verdict finish();

    /// Peak working-state bits: sketch counters, scalars, stored sets and the largest frame.
    std::size_t vcost_bits() const;

private:
    struct State;
    std::unique_ptr<State> s_;
};

/// Sketch shape the verifier uses for its equality checks over `universe` ids.
SketchShape verifier_shape(std::uint64_t universe);

/// Terminals the AM scheme derives from the public seed: min(n, 2 ceil(log2 n))
/// distinct vertices, sorted.
std::vector<Vertex> am_terminals(std::uint32_t n, std::uint64_t public_seed);

// ---- prover and harness --------------------------------------------------

struct ProverConfig {
    SchemeId scheme = SchemeId::KVConn;
    std::uint32_t k = 1;
    PathMode mode = PathMode::Vertex;  // SGT scheme only
    std::uint64_t seed = 0;
    std::uint64_t public_seed = 0;
    ProverBehavior behavior = ProverBehavior::Honest;
};

/// Builds the proof for a stream; honest or tampered per config.behavior.
Proof prove(const Stream& stream, const ProverConfig& config);

struct ProofTranscript {
    SchemeId scheme = SchemeId::KVConn;
    std::uint32_t k = 1;
    std::uint32_t n = 0;
    bool claim = false;
    Verdict verdict;
    std::size_t hcost_bits = 0;
    std::size_t disclosure_bits = 0;  // disclosure and residual frames
    std::size_t vcost_bits = 0;
    std::size_t frames = 0;
    std::size_t max_layered_length = 0;  // over blocks
    std::uint32_t max_retries = 0;

    /// One JSON-style line with keys scheme, k, n, hcost_bits, vcost_bits, verdict.
    std::string costs_line() const;
};

/// Verifies proof bytes against a stream.
ProofTranscript verify_proof(const Stream& stream, std::span<const std::uint8_t> proof_bytes,
                             const VerifierConfig& config);

struct ProtocolOptions {
    std::uint32_t k = 1;
    PathMode mode = PathMode::Vertex;  // SGT scheme only
    std::uint64_t public_seed = 0;
};

/// Verifier ingests the stream, the prover composes its proof, the verifier reads it.
/// Prover and verifier seeds are derived independently from `seed`.
ProofTranscript run_protocol(const Stream& stream, SchemeId scheme, ProverBehavior behavior,
                             std::uint64_t seed, const ProtocolOptions& options);

ProofTranscript scheme_kvconn(const Stream& s, std::uint32_t k, std::uint64_t seed,
                              ProverBehavior b = ProverBehavior::Honest);
ProofTranscript scheme_keconn(const Stream& s, std::uint32_t k, std::uint64_t seed,
                              ProverBehavior b = ProverBehavior::Honest);
ProofTranscript scheme_gap_vconn(const Stream& s, std::uint32_t k, std::uint64_t seed,
                                 ProverBehavior b = ProverBehavior::Honest);
ProofTranscript scheme_am_vconn(const Stream& s, std::uint32_t k, std::uint64_t shared_seed,
                                ProverBehavior b = ProverBehavior::Honest);
ProofTranscript scheme_sgt(const Stream& s, std::uint32_t k, PathMode mode, std::uint64_t seed,
                           ProverBehavior b = ProverBehavior::Honest);

/// Runs only the cut branch: verifier ingests the stream, then checks the given cut.
Verdict verify_not_k_connected(const Stream& stream, const CutProof& cut, std::uint32_t k,
                               std::uint64_t seed);
/// Runs only the connected branch with one layered block (keconn framing in edge
/// mode, single-terminal kvconn framing with k = 1 block count waived in vertex mode).
Verdict layering_verify(const Stream& stream, const LayeredProof& proof, std::uint32_t k,
                        std::uint64_t seed);

}  // namespace sgt
