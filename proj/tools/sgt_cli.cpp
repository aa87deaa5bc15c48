#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "sgt/annotated.hpp"
#include "sgt/counters.hpp"
#include "sgt/graph_sketch.hpp"
#include "sgt/kconn_cert.hpp"
#include "sgt/l0_sketch.hpp"
#include "sgt/oracles.hpp"
#include "sgt/random.hpp"
#include "sgt/stream.hpp"

namespace {

using namespace sgt;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("SKETCH_SEED"); env && *env) {
        try {
            std::size_t used = 0;
            const auto value = std::stoull(env, &used, 0);
            if (used == std::strlen(env)) {
                return value;
            }
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("SKETCH_SEED is not a 64-bit integer: ") + env);
    }
    return 0;
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Stream load_stream(const std::string& path) {
    try {
        return read_stream_file(path);
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

PathMode parse_mode(const std::string& mode) {
    if (mode == "vertex") {
        return PathMode::Vertex;
    }
    if (mode == "edge") {
        return PathMode::Edge;
    }
    throw UsageError("mode must be 'vertex' or 'edge'");
}

Graph support_graph(const Stream& s) { return exact_support(s).support(); }

void print_seed(std::ostream& out, std::uint64_t seed) { out << "# seed=" << seed << "\n"; }

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

struct GenOptions {
    std::string kind;
    std::uint32_t n = 8;
    std::uint32_t m = 0;
    std::uint32_t count = 1;
    std::uint32_t k = 2;
    std::string alpha = "1";
    double density = 0.5;
    double cancel = 0.0;
    std::string blocks;
    std::string query;
    std::size_t index = 1;
};

int run_gen(const GenOptions& o, std::uint64_t seed) {
    const BigInt alpha = parse_bigint(o.alpha);
    Stream s;
    auto from_graph = [&](const Graph& g) { return stream_from_edges(g.vertex_count(), g.edges(), alpha); };
    auto instance = [&]() {
        EqIdxInstance inst{split_commas(o.blocks), o.query, o.index};
        inst.validate();
        return inst;
    };
    const BigInt eq_alpha = o.alpha == "1" ? BigInt(0) : alpha;
    if (o.kind == "complete") {
        s = from_graph(graphs::complete(o.n));
    } else if (o.kind == "complete-bipartite") {
        s = from_graph(graphs::complete_bipartite(o.n, o.m));
    } else if (o.kind == "cycle") {
        s = from_graph(graphs::cycle(o.n));
    } else if (o.kind == "path") {
        s = from_graph(graphs::path(o.n));
    } else if (o.kind == "star") {
        s = from_graph(graphs::star(o.n));
    } else if (o.kind == "hypercube") {
        s = from_graph(graphs::hypercube(o.n));
    } else if (o.kind == "minus-matching") {
        s = from_graph(graphs::complete_minus_matching(o.n, o.count));
    } else if (o.kind == "random-graph") {
        s = from_graph(graphs::random(o.n, o.density, seed));
    } else if (o.kind == "random-sgt") {
        s = gen_random_sgt(o.n, alpha, o.density, o.cancel, seed);
    } else if (o.kind == "eqidx-distinct") {
        s = gen_eqidx_distinct_items(instance(), eq_alpha);
    } else if (o.kind == "eqidx-conn") {
        s = gen_eqidx_sgt_connectivity(instance(), eq_alpha);
    } else if (o.kind == "eqidx-kconn") {
        s = gen_eqidx_sgt_kconn(instance(), o.k, eq_alpha);
    } else {
        throw UsageError("unknown generator '" + o.kind + "'");
    }
    print_seed(std::cout, seed);
    std::cout << emit_stream(s);
    return kOk;
}

int run_sketch(const std::string& path, const std::string& out_path, std::uint64_t seed) {
    const Stream s = load_stream(path);
    const SketchShape shape = SketchShape::standard(s.header.coordinate_count(), s.header.alpha);
    L0Sketch sketch(shape, seed);
    for (const auto& t : s.tokens) {
        sketch.update(t.kind == StreamToken::Kind::Edge ? edge_slot(t.u, t.v) : t.element, t.delta);
    }
    print_seed(std::cout, seed);
    std::cout << "levels " << shape.levels << " reps " << shape.reps << " counters "
              << shape.counter_count() << " state_bits " << sketch.state_bits() << "\n";
    if (const auto i = sketch.sample()) {
        if (s.header.model == StreamModel::Sgt) {
            const auto [a, b] = slot_endpoints(*i);
            std::cout << "sample " << a << " " << b << "\n";
        } else {
            std::cout << "sample " << *i << "\n";
        }
    } else {
        std::cout << "sample FAIL\n";
    }
    if (!out_path.empty()) {
        const auto bytes = sketch.serialize();
        std::ofstream out(out_path, std::ios::binary);
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        if (!out) {
            throw UsageError("cannot write " + out_path);
        }
    }
    return kOk;
}

int run_forest(const std::string& path, std::uint64_t seed) {
    const Stream s = load_stream(path);
    if (s.header.model != StreamModel::Sgt) {
        throw UsageError("forest needs an SGT stream");
    }
    VertexSketchBank bank(static_cast<std::uint32_t>(s.header.universe), seed);
    bank.ingest(s);
    const Forest f = spanning_forest(bank);
    print_seed(std::cout, seed);
    for (const auto& [a, b] : f.edges) {
        std::cout << a << " " << b << "\n";
    }
    std::cout << "# components=" << f.components().size() << "\n";
    return kOk;
}

int run_cert(const std::string& path, std::uint32_t k, double constant, std::uint64_t seed) {
    const Stream s = load_stream(path);
    if (s.header.model != StreamModel::Sgt) {
        throw UsageError("cert needs an SGT stream");
    }
    CertParams params{static_cast<std::uint32_t>(s.header.universe), k, constant, seed};
    const Certificate c = certify_stream(s, params);
    const bool verdict = c.n >= 2 && min_cut(c.graph()) >= k;
    print_seed(std::cout, seed);
    std::cout << "# r=" << c.r << " edges=" << c.edges.size() << "\n";
    for (const auto& [a, b] : c.edges) {
        std::cout << a << " " << b << "\n";
    }
    std::cout << "verdict " << (verdict ? "true" : "false") << "\n";
    return verdict ? kOk : kNegative;
}

struct ProofOptions {
    std::string scheme = "kvconn";
    std::uint32_t k = 1;
    std::string mode = "vertex";
    std::uint64_t public_seed = 0;
    std::string tamper = "honest";
    bool costs = false;
};

int run_prove(const std::string& path, const ProofOptions& o, std::uint64_t seed) {
    const Stream s = load_stream(path);
    ProverConfig cfg;
    cfg.scheme = parse_scheme(o.scheme);
    cfg.k = o.k;
    cfg.mode = parse_mode(o.mode);
    cfg.seed = seed;
    cfg.public_seed = o.public_seed;
    cfg.behavior = parse_behavior(o.tamper);
    const auto bytes = encode_proof(prove(s, cfg));
    // The proof is binary, so the seed goes to stderr.
    print_seed(std::cerr, seed);
    std::cout.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    return kOk;
}

int run_verify(const std::string& path, const std::string& proof_path, const ProofOptions& o,
               std::uint64_t seed) {
    const Stream s = load_stream(path);
    const auto bytes = read_bytes(proof_path);
    VerifierConfig cfg;
    cfg.scheme = parse_scheme(o.scheme);
    cfg.k = o.k;
    cfg.mode = parse_mode(o.mode);
    cfg.seed = seed;
    cfg.public_seed = o.public_seed;
    const ProofTranscript t = verify_proof(s, bytes, cfg);
    print_seed(std::cout, seed);
    if (o.costs) {
        std::cout << t.costs_line() << "\n";
    }
    if (t.verdict.kind == VerdictKind::Accept) {
        std::cout << "ACCEPT OUTPUT(" << (t.verdict.output ? "true" : "false") << ")\n";
        return kOk;
    }
    std::cout << "REJECT " << t.verdict.reason << "\n";
    return kNegative;
}

int run_oracle(const std::string& predicate, const std::string& path) {
    const Stream s = load_stream(path);
    if (predicate == "distinct") {
        std::cout << exact_frequencies(s).size() << "\n";
        return kOk;
    }
    if (s.header.model != StreamModel::Sgt) {
        throw UsageError("predicate '" + predicate + "' needs an SGT stream");
    }
    const Graph g = support_graph(s);
    if (predicate == "components") {
        const auto comps = components(g);
        std::cout << comps.size() << "\n";
        for (const auto& c : comps) {
            for (std::size_t i = 0; i < c.size(); ++i) {
                std::cout << (i ? " " : "") << c[i];
            }
            std::cout << "\n";
        }
    } else if (predicate == "min_cut") {
        std::cout << (g.vertex_count() < 2 ? 0 : min_cut(g)) << "\n";
    } else if (predicate == "vertex_connectivity") {
        std::cout << vertex_connectivity(g) << "\n";
    } else {
        throw UsageError("unknown predicate '" + predicate + "'");
    }
    return kOk;
}

int run_bench(std::uint32_t k, std::uint64_t seed) {
    print_seed(std::cout, seed);
    std::cout << "# annotated proofs on K_n, honest prover\n";
    for (const SchemeId scheme : {SchemeId::KVConn, SchemeId::KEConn, SchemeId::Gap, SchemeId::AM, SchemeId::Sgt}) {
        for (const std::uint32_t n : {16U, 32U, 64U}) {
            const Graph g = graphs::complete(n);
            const Stream s = stream_from_edges(n, g.edges());
            const auto start = std::chrono::steady_clock::now();
            const PathMode mode = scheme == SchemeId::KEConn ? PathMode::Edge : PathMode::Vertex;
            const ProofTranscript t =
                run_protocol(s, scheme, ProverBehavior::Honest, seed, ProtocolOptions{k, mode, seed});
            const double ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            std::cout << t.costs_line() << " # " << ms << " ms\n";
        }
    }
    std::cout << "# k-edge-connectivity certificate\n";
    for (const std::uint32_t n : {16U, 32U, 64U}) {
        const Stream s = stream_from_edges(n, graphs::complete(n).edges());
        const auto start = std::chrono::steady_clock::now();
        const Certificate c = certify_stream(s, CertParams{n, k, 20.0, seed});
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::cout << "cert n=" << n << " k=" << k << " r=" << c.r << " edges=" << c.edges.size() << " # " << ms
                  << " ms\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sketches, certificates and annotated proofs for turnstile graph streams"};
    app.require_subcommand(1);
    std::optional<std::uint64_t> seed_flag;
    app.add_option("--seed", seed_flag, "64-bit seed (falls back to $SKETCH_SEED, then 0)");

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a generated stream to stdout");
    gen_cmd->add_option("kind", gen.kind,
                        "complete | complete-bipartite | cycle | path | star | hypercube | minus-matching | "
                        "random-graph | random-sgt | eqidx-distinct | eqidx-conn | eqidx-kconn")
        ->required();
    gen_cmd->add_option("--n", gen.n, "vertex count (leaves for star, dimension for hypercube)");
    gen_cmd->add_option("--m", gen.m, "second side of complete-bipartite");
    gen_cmd->add_option("--count", gen.count, "matching edges removed by minus-matching");
    gen_cmd->add_option("--k", gen.k, "right side size for eqidx-kconn");
    gen_cmd->add_option("--alpha", gen.alpha, "frequency bound");
    gen_cmd->add_option("--density", gen.density, "edge probability for random generators");
    gen_cmd->add_option("--cancel", gen.cancel, "fraction of touched slots cancelled (random-sgt)");
    gen_cmd->add_option("--blocks", gen.blocks, "comma-separated bit strings (eqidx-*)");
    gen_cmd->add_option("--query", gen.query, "query bit string (eqidx-*)");
    gen_cmd->add_option("--index", gen.index, "1-based block index (eqidx-*)");

    std::string stream_path;
    std::string out_path;
    auto* sketch_cmd = app.add_subcommand("sketch", "Build an L0 sketch of a stream and sample it");
    sketch_cmd->add_option("stream", stream_path)->required()->check(CLI::ExistingFile);
    sketch_cmd->add_option("--out", out_path, "write the serialized sketch here");

    auto* forest_cmd = app.add_subcommand("forest", "Spanning forest of the support graph from sketches");
    forest_cmd->add_option("stream", stream_path)->required()->check(CLI::ExistingFile);

    std::uint32_t cert_k = 1;
    double cert_constant = 20.0;
    auto* cert_cmd = app.add_subcommand("cert", "k-edge-connectivity certificate and verdict");
    cert_cmd->add_option("--k", cert_k)->required()->check(CLI::PositiveNumber);
    cert_cmd->add_option("--cert-constant", cert_constant, "C in r = ceil(C k ln n)")->check(CLI::PositiveNumber);
    cert_cmd->add_option("stream", stream_path)->required()->check(CLI::ExistingFile);

    ProofOptions proof;
    auto add_proof_options = [&proof](CLI::App* cmd) {
        cmd->add_option("--scheme", proof.scheme, "kvconn | keconn | gap | am | sgt")->required();
        cmd->add_option("--k", proof.k)->required()->check(CLI::PositiveNumber);
        cmd->add_option("--mode", proof.mode, "vertex | edge (sgt scheme)");
        cmd->add_option("--public-seed", proof.public_seed, "public coins for the am scheme");
    };
    auto* prove_cmd = app.add_subcommand("prove", "Write a proof for a stream to stdout");
    add_proof_options(prove_cmd);
    prove_cmd->add_option("--tamper", proof.tamper,
                          "honest | edge-not-in-input | multiplicity-lie | sign-lie | non-disjoint | broken-path | "
                          "undersized-cut | terminal-duplication");
    prove_cmd->add_option("stream", stream_path)->required()->check(CLI::ExistingFile);

    std::string proof_path;
    auto* verify_cmd = app.add_subcommand("verify", "Check a proof against a stream");
    add_proof_options(verify_cmd);
    verify_cmd->add_flag("--costs", proof.costs, "print hcost/vcost/verdict as one line");
    verify_cmd->add_option("stream", stream_path)->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("proof", proof_path)->required()->check(CLI::ExistingFile);

    std::string predicate;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact answers: components, min_cut, vertex_connectivity, distinct");
    oracle_cmd->add_option("predicate", predicate)->required();
    oracle_cmd->add_option("stream", stream_path)->required()->check(CLI::ExistingFile);

    std::uint32_t bench_k = 3;
    auto* bench_cmd = app.add_subcommand("bench", "Proof costs on K_n for n in {16, 32, 64}");
    bench_cmd->add_option("--k", bench_k)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        const std::uint64_t seed = resolve_seed(seed_flag);
        if (gen_cmd->parsed()) {
            return run_gen(gen, seed);
        }
        if (sketch_cmd->parsed()) {
            return run_sketch(stream_path, out_path, seed);
        }
        if (forest_cmd->parsed()) {
            return run_forest(stream_path, seed);
        }
        if (cert_cmd->parsed()) {
            return run_cert(stream_path, cert_k, cert_constant, seed);
        }
        if (prove_cmd->parsed()) {
            return run_prove(stream_path, proof, seed);
        }
        if (verify_cmd->parsed()) {
            return run_verify(stream_path, proof_path, proof, seed);
        }
        if (oracle_cmd->parsed()) {
            return run_oracle(predicate, stream_path);
        }
        return run_bench(bench_k, seed);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const NoSuchProof& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNegative;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNegative;
    }
}
