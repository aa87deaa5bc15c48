// Acceptance battery: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sgt/annotated.hpp"
#include "sgt/counters.hpp"
#include "sgt/graph_sketch.hpp"
#include "sgt/kconn_cert.hpp"
#include "sgt/l0_sketch.hpp"
#include "sgt/oracles.hpp"
#include "sgt/random.hpp"
#include "sgt/stream.hpp"

using namespace sgt;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

BigInt random_bits(Rng& rng, unsigned bits) {
    BigInt v = 0;
    for (unsigned i = 0; i < bits; i += 64) {
        v = (v << 64) | BigInt(rng.next());
    }
    return v & (pow2(bits) - 1);
}

/// Uniform magnitude length in [1, bits], random sign, never zero.
BigInt random_nonzero(Rng& rng, unsigned bits) {
    const auto len = static_cast<unsigned>(rng.between(1, bits));
    BigInt v = random_bits(rng, len) | pow2(len - 1);
    return rng.chance(0.5) ? v : BigInt(-v);
}

/// Non-zero values with many large prime factors: the hardest inputs for a
/// modular zero test, since each 61-bit factor is a prime the counter could draw.
BigInt adversarial_value(Rng& rng, unsigned max_bits) {
    switch (rng.below(4)) {
        case 0: {
            BigInt v = 1;
            while (true) {
                const BigInt next = v * random_prime61(rng.next());
                if (bit_length(next) > max_bits) {
                    break;
                }
                v = next;
            }
            return rng.chance(0.5) ? v : BigInt(-v);
        }
        case 1:
            return pow2(static_cast<unsigned>(rng.below(max_bits)));
        case 2: {
            BigInt v = 1;
            for (std::uint64_t p = 2; bit_length(v * p) <= max_bits; ++p) {
                if (is_prime_u64(p)) {
                    v *= p;
                }
            }
            return -v;
        }
        default:
            return random_nonzero(rng, max_bits);
    }
}

Stream from_graph(const Graph& g) { return stream_from_edges(g.vertex_count(), g.edges()); }

/// SGT stream over g: every edge gets a random signed frequency up to alpha,
/// split across tokens; a few non-edges are touched and cancelled.
Stream signed_stream(const Graph& g, const BigInt& alpha, std::uint64_t seed) {
    Rng rng(seed);
    Stream s;
    s.header = {StreamModel::Sgt, g.vertex_count(), alpha};
    for (const auto& [a, b] : g.edges()) {
        const BigInt f = rng.chance(0.5) ? rng.big_between_one_and(alpha) : BigInt(-rng.big_between_one_and(alpha));
        const BigInt part = f > 0 ? BigInt(rng.big_between_one_and(f)) : BigInt(-rng.big_between_one_and(-f));
        s.tokens.push_back(StreamToken::edge_update(a, b, part));
        if (part != f) {
            s.tokens.push_back(StreamToken::edge_update(a, b, f - part));
        }
    }
    const std::uint32_t n = g.vertex_count();
    for (int i = 0; i < static_cast<int>(n); ++i) {
        const auto a = static_cast<Vertex>(rng.below(n));
        const auto b = static_cast<Vertex>(rng.below(n));
        if (a == b || g.has_edge(a, b)) {
            continue;
        }
        const BigInt f = rng.big_between_one_and(alpha);
        s.tokens.push_back(StreamToken::edge_update(a, b, f));
        s.tokens.push_back(StreamToken::edge_update(a, b, -f));
    }
    for (std::size_t i = s.tokens.size(); i > 1; --i) {
        std::swap(s.tokens[i - 1], s.tokens[rng.below(i)]);
    }
    return s;
}

/// Two cliques of size `size` sharing `shared` vertices: vertex connectivity `shared`.
Graph shared_cliques(std::uint32_t size, std::uint32_t shared) {
    const std::uint32_t n = 2 * size - shared;
    Graph g(n);
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            const bool left = b < size;
            const bool right = a >= size - shared;
            if (left || right) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

/// Two cliques of size `size` joined by `bridges` disjoint edges: edge connectivity `bridges`.
Graph bridged_cliques(std::uint32_t size, std::uint32_t bridges) {
    Graph g(2 * size);
    for (Vertex a = 0; a < 2 * size; ++a) {
        for (Vertex b = a + 1; b < 2 * size; ++b) {
            if ((a < size) == (b < size)) {
                g.add_edge(a, b);
            }
        }
    }
    for (Vertex i = 0; i < bridges; ++i) {
        g.add_edge(i, size + i);
    }
    return g;
}

std::string bit_string(std::uint64_t value, std::size_t width) {
    std::string out(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        if ((value >> (width - 1 - i)) & 1U) {
            out[i] = '1';
        }
    }
    return out;
}

// ---- criterion 1 ---------------------------------------------------------

Outcome decision_counter() {
    const auto start = Clock::now();
    Rng rng(101);
    std::size_t zero_failures = 0;
    for (std::uint64_t t = 0; t < 100000; ++t) {
        const std::size_t len = rng.between(1, 12);
        std::vector<BigInt> deltas;
        BigInt sum = 0;
        for (std::size_t i = 0; i + 1 < len; ++i) {
            deltas.push_back(random_nonzero(rng, 255));
            sum += deltas.back();
        }
        deltas.push_back(-sum);
        for (std::size_t i = deltas.size(); i > 1; --i) {
            std::swap(deltas[i - 1], deltas[rng.below(i)]);
        }
        const DecisionCounter c = counter_ingest(CounterParams{1, pow2(256)}, derive_seed(1, t), deltas);
        zero_failures += c.is_zero() ? 0 : 1;
    }
    std::size_t false_zero = 0;
    for (std::uint64_t t = 0; t < 10000; ++t) {
        const BigInt target = adversarial_value(rng, 256);
        const BigInt part = random_nonzero(rng, 255);
        const std::vector<BigInt> deltas{part, target - part};
        const DecisionCounter c = counter_ingest(CounterParams{1, pow2(256)}, derive_seed(2, t), deltas);
        false_zero += c.is_zero() ? 1 : 0;
    }
    const double secs = seconds_since(start);
    return {zero_failures == 0 && false_zero <= 10 && secs < 10.0,
            fmt("zero-sum misses %zu/100000, false zeros %zu/10000 (limit 10), %.1f s (limit 10 s)",
                zero_failures, false_zero, secs)};
}

// ---- criteria 2 and 3 ----------------------------------------------------

struct Regime {
    const char* name;
    std::size_t lo;
    std::size_t hi;
};

constexpr Regime kRegimes[] = {{"0", 0, 0}, {"1", 1, 1}, {"2-16", 2, 16}, {"17-256", 17, 256}};

std::map<std::uint64_t, BigInt> random_support_vector(Rng& rng, std::size_t size) {
    std::map<std::uint64_t, BigInt> f;
    while (f.size() < size) {
        f[rng.below(256)] = random_nonzero(rng, 128);
    }
    return f;
}

Outcome l0_sampler() {
    const auto start = Clock::now();
    const SketchShape shape = SketchShape::standard(256, pow2(128));
    Rng rng(202);
    bool pass = true;
    std::string detail;
    std::uint64_t seed = 0;
    for (const Regime& r : kRegimes) {
        std::size_t hit = 0;
        std::size_t fail = 0;
        std::size_t wrong = 0;
        for (int t = 0; t < 500; ++t) {
            const auto f = random_support_vector(rng, rng.between(r.lo, r.hi));
            L0Sketch sketch(shape, ++seed);
            for (const auto& [i, v] : f) {
                const BigInt part = random_nonzero(rng, 128);
                sketch.update(i, part);
                sketch.update(i, v - part);
            }
            const auto got = sketch.sample();
            if (!got) {
                ++fail;
            } else if (f.count(*got)) {
                ++hit;
            } else {
                ++wrong;
            }
        }
        const bool ok = r.hi == 0 ? fail == 500 : (hit >= 490 && fail <= 10);
        pass = pass && ok;
        detail += fmt("support %s: in-support %zu, FAIL %zu, wrong %zu; ", r.name, hit, fail, wrong);
    }
    const double secs = seconds_since(start);
    pass = pass && secs < 60.0;
    return {pass, detail + fmt("%.1f s (limit 60 s)", secs)};
}

Outcome support_one_detector() {
    const std::uint32_t reps = SketchShape::default_repetitions(256, pow2(128));
    Rng rng(303);
    std::size_t agree = 0;
    std::size_t total = 0;
    std::string detail;
    std::uint64_t seed = 0;
    for (const Regime& r : kRegimes) {
        std::size_t regime_agree = 0;
        for (int t = 0; t < 375; ++t) {
            const auto f = random_support_vector(rng, rng.between(r.lo, r.hi));
            auto detector = make_support_one_detector(256, reps, ++seed);
            for (const auto& [i, v] : f) {
                detector.update(i, v);
            }
            regime_agree += support_one_detect(detector) == (f.size() == 1) ? 1 : 0;
        }
        agree += regime_agree;
        total += 375;
        detail += fmt("support %s: %zu/375; ", r.name, regime_agree);
    }
    return {agree * 100 >= total * 99, detail + fmt("overall %zu/%zu (need 99%%)", agree, total)};
}

// ---- criterion 4 ---------------------------------------------------------

Outcome spanning_forest_battery() {
    const auto start = Clock::now();
    std::size_t matched = 0;
    std::size_t total = 0;
    std::size_t bad_edges = 0;
    std::string detail;
    for (const double cancel : {0.0, 0.3, 1.0}) {
        std::size_t m = 0;
        for (std::uint64_t t = 0; t < 200; ++t) {
            const double density = std::vector<double>{0.005, 0.01, 0.02, 0.05}[t % 4];
            const std::uint64_t seed = derive_seed(404, static_cast<std::uint64_t>(cancel * 10), t);
            const Stream s = gen_random_sgt(128, pow2(128), density, cancel, seed);
            const ExactGraph exact = exact_support(s);
            VertexSketchBank bank(128, seed);
            bank.ingest(s);
            const Forest f = spanning_forest(bank);
            for (const auto& [a, b] : f.edges) {
                bad_edges += exact.freq.count(edge_slot(a, b)) ? 0 : 1;
            }
            m += f.components() == components(exact.support()) ? 1 : 0;
        }
        matched += m;
        total += 200;
        detail += fmt("cancel %.1f: %zu/200; ", cancel, m);
    }
    return {matched * 100 >= total * 95 && bad_edges == 0,
            detail + fmt("partition match %zu/%zu (need 95%%), non-support forest edges %zu, %.1f s", matched,
                         total, bad_edges, seconds_since(start))};
}

// ---- criterion 5 ---------------------------------------------------------

Outcome certificate_battery() {
    const auto start = Clock::now();
    struct Fixture {
        std::string name;
        Stream stream;
        std::uint32_t k;
    };
    std::vector<Fixture> fixtures;
    auto add_graph = [&](const std::string& name, const Graph& g, std::uint32_t k) {
        fixtures.push_back({name, from_graph(g), k});
    };
    add_graph("K64", graphs::complete(64), 5);
    add_graph("K6", graphs::complete(6), 5);
    add_graph("K5,40", graphs::complete_bipartite(5, 40), 5);
    add_graph("K4,40", graphs::complete_bipartite(4, 40), 5);
    add_graph("C64", graphs::cycle(64), 2);
    add_graph("C64", graphs::cycle(64), 3);
    add_graph("Q6", graphs::hypercube(6), 5);
    add_graph("Q5", graphs::hypercube(5), 5);
    add_graph("Q4", graphs::hypercube(4), 5);
    add_graph("K16-M8", graphs::complete_minus_matching(16, 8), 5);
    add_graph("K6-M3", graphs::complete_minus_matching(6, 3), 5);
    add_graph("K6-M3", graphs::complete_minus_matching(6, 3), 4);
    {
        const EqIdxInstance differ{{"0110", "1001", "1111", "0000"}, "1011", 2};
        const EqIdxInstance equal{{"0110", "1001", "1111", "0000"}, "1001", 2};
        fixtures.push_back({"eqidx-conn differ", gen_eqidx_sgt_connectivity(differ), 1});
        fixtures.push_back({"eqidx-conn equal", gen_eqidx_sgt_connectivity(equal), 1});
    }
    {
        std::vector<std::string> blocks;
        for (int i = 0; i < 24; ++i) {
            blocks.push_back(bit_string(static_cast<std::uint64_t>(i % 4), 2));
        }
        fixtures.push_back({"eqidx-kconn differ", gen_eqidx_sgt_kconn({blocks, "11", 5}, 3), 3});
        fixtures.push_back({"eqidx-kconn equal", gen_eqidx_sgt_kconn({blocks, "00", 5}, 3), 3});
    }

    std::size_t agree = 0;
    std::size_t total = 0;
    std::size_t oversize = 0;
    std::string mismatches;
    for (const auto& fx : fixtures) {
        const ExactGraph exact = exact_support(fx.stream);
        const bool truth = min_cut(exact.support()) >= fx.k;
        std::size_t fixture_agree = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const CertParams params{exact.n, fx.k, 20.0, derive_seed(505, seed)};
            const Certificate h = certify_stream(fx.stream, params);
            const bool verdict = min_cut(h.graph()) >= fx.k;
            fixture_agree += verdict == truth ? 1 : 0;
            oversize += h.edges.size() <= std::size_t{h.r} * (exact.n - 1) ? 0 : 1;
        }
        agree += fixture_agree;
        total += 100;
        if (fixture_agree != 100) {
            mismatches += fmt("%s k=%u: %zu/100; ", fx.name.c_str(), fx.k, fixture_agree);
        }
    }
    const double secs = seconds_since(start);
    return {agree == total && oversize == 0 && secs < 300.0,
            mismatches + fmt("%zu fixtures, verdict agreement %zu/%zu, size-bound violations %zu, %.1f s "
                             "(limit 300 s)",
                             fixtures.size(), agree, total, oversize, secs)};
}

// ---- criterion 6 ---------------------------------------------------------

Outcome distinct_items() {
    const auto start = Clock::now();
    Rng rng(606);
    std::size_t exact = 0;
    for (std::uint64_t t = 0; t < 500; ++t) {
        std::vector<BigInt> freq(512, 0);
        const double density = rng.unit();
        std::size_t support = 0;
        for (auto& f : freq) {
            if (rng.chance(density)) {
                f = adversarial_value(rng, 256);
                ++support;
            }
        }
        const Stream s = stream_from_frequencies(freq, pow2(256), derive_seed(6, t), true);
        exact += count_distinct(s, CounterParams{512, pow2(256)}, derive_seed(66, t)) == support ? 1 : 0;
    }

    std::size_t eq_exact = 0;
    std::size_t eq_total = 0;
    for (std::size_t p = 1; p <= 4; ++p) {
        for (std::size_t q = 1; q <= 4; ++q) {
            const std::uint64_t values = 1ULL << q;
            const std::uint64_t combos = 1ULL << (p * q);
            for (std::uint64_t x = 0; x < combos; ++x) {
                std::vector<std::string> blocks;
                for (std::size_t i = 0; i < p; ++i) {
                    blocks.push_back(bit_string((x >> (i * q)) & (values - 1), q));
                }
                for (std::uint64_t y = 0; y < values; ++y) {
                    for (std::size_t j = 1; j <= p; ++j) {
                        const EqIdxInstance inst{blocks, bit_string(y, q), j};
                        const Stream s = gen_eqidx_distinct_items(inst);
                        const std::size_t truth = inst.answer() ? p - 1 : p;
                        eq_exact += count_distinct(s, CounterParams{p, s.header.alpha}, derive_seed(67, eq_total)) ==
                                            truth
                                        ? 1
                                        : 0;
                        ++eq_total;
                    }
                }
            }
        }
    }
    return {exact * 100 >= 500 * 98 && eq_exact * 100 >= eq_total * 98,
            fmt("random N=512 exact %zu/500 (need 98%%); Equals-Index p,q<=4 exhaustive exact %zu/%zu; %.1f s",
                exact, eq_exact, eq_total, seconds_since(start))};
}

// ---- criteria 7 and 8 ----------------------------------------------------

struct SchemeCase {
    std::string name;
    SchemeId scheme;
    PathMode mode;
};

const std::vector<SchemeCase> kSchemes = {
    {"kvconn", SchemeId::KVConn, PathMode::Vertex},   {"keconn", SchemeId::KEConn, PathMode::Edge},
    {"gap", SchemeId::Gap, PathMode::Vertex},         {"am", SchemeId::AM, PathMode::Vertex},
    {"sgt-vertex", SchemeId::Sgt, PathMode::Vertex},  {"sgt-edge", SchemeId::Sgt, PathMode::Edge},
};

struct ProtoFixture {
    std::string name;
    Stream stream;
    std::uint32_t k;
};

bool truth_for(const Stream& s, std::uint32_t k, PathMode mode) {
    const Graph g = exact_support(s).support();
    return mode == PathMode::Vertex ? vertex_connectivity(g) >= k : min_cut(g) >= k;
}

ProofTranscript run_case(const SchemeCase& sc, const Stream& s, std::uint32_t k, ProverBehavior b,
                         std::uint64_t seed) {
    const std::uint64_t public_seed = derive_seed(seed, 0xa11);
    return run_protocol(s, sc.scheme, b, seed, ProtocolOptions{k, sc.mode, public_seed});
}

std::vector<ProtoFixture> completeness_fixtures(const SchemeCase& sc) {
    const bool sgt = sc.scheme == SchemeId::Sgt;
    auto make = [&](const std::string& name, const Graph& g, std::uint32_t k) {
        return ProtoFixture{name, sgt ? signed_stream(g, pow2(64), 77) : from_graph(g), k};
    };
    std::vector<ProtoFixture> out;
    if (sc.mode == PathMode::Edge) {
        out.push_back(make("K64", graphs::complete(64), 5));
        out.push_back(make("C64", graphs::cycle(64), 2));
        out.push_back(make("C64", graphs::cycle(64), 3));
        out.push_back(make("bridged K8+K8", bridged_cliques(8, 2), 3));
    } else {
        out.push_back(make("K64", graphs::complete(64), 5));
        out.push_back(make("star64", graphs::star(63), 2));
        out.push_back(make("shared K10+K10", shared_cliques(10, 2), 3));
        if (sc.scheme == SchemeId::Gap) {
            out.push_back(make("K9", graphs::complete(9), 4));
        } else {
            out.push_back(make("Q6", graphs::hypercube(6), 3));
        }
    }
    if (sgt) {
        std::vector<std::string> blocks;
        for (int i = 0; i < 12; ++i) {
            blocks.push_back(bit_string(static_cast<std::uint64_t>(i % 4), 2));
        }
        out.push_back({"eqidx-kconn differ", gen_eqidx_sgt_kconn({blocks, "11", 5}, 2), 2});
        out.push_back({"eqidx-kconn equal", gen_eqidx_sgt_kconn({blocks, "00", 5}, 2), 2});
    }
    return out;
}

Outcome annotated_schemes() {
    const auto start = Clock::now();
    constexpr std::size_t kVcostLimit = 64 * 1024 * 8;
    bool pass = true;
    std::string detail;
    std::size_t max_vcost_64 = 0;
    for (const SchemeCase& sc : kSchemes) {
        // Completeness.
        std::size_t worst = 50;
        for (const auto& fx : completeness_fixtures(sc)) {
            const bool truth = truth_for(fx.stream, fx.k, sc.mode);
            std::size_t good = 0;
            for (std::uint64_t seed = 0; seed < 50; ++seed) {
                const ProofTranscript t = run_case(sc, fx.stream, fx.k, ProverBehavior::Honest, derive_seed(707, seed));
                good += t.verdict.kind == VerdictKind::Accept && t.verdict.output == truth ? 1 : 0;
                if (t.n == 64) {
                    max_vcost_64 = std::max(max_vcost_64, t.vcost_bits);
                    pass = pass && t.vcost_bits <= kVcostLimit && t.hcost_bits > t.vcost_bits / 8;
                }
            }
            worst = std::min(worst, good);
            if (good < 45) {
                pass = false;
                detail += fmt("%s on %s k=%u: honest %zu/50; ", sc.name.c_str(), fx.name.c_str(), fx.k, good);
            }
        }
        // Soundness: claim-true cheats on graphs below k, false-cut cheats on graphs at or above k.
        const bool sgt = sc.scheme == SchemeId::Sgt;
        auto prep = [&](const Graph& g, std::uint64_t seed) { return sgt ? signed_stream(g, pow2(64), seed) : from_graph(g); };
        const std::uint32_t k = 3;
        const Graph weak = sc.mode == PathMode::Edge ? bridged_cliques(8, 2) : shared_cliques(10, 2);
        const Graph strong = graphs::complete(16);
        std::size_t worst_reject = 50;
        std::string worst_class;
        for (ProverBehavior b : tamper_classes()) {
            std::size_t rejected = 0;
            for (std::uint64_t seed = 0; seed < 50; ++seed) {
                const bool use_strong = b == ProverBehavior::UndersizedCut ||
                                        ((b == ProverBehavior::MultiplicityLie || b == ProverBehavior::SignLie) &&
                                         seed % 2 == 0);
                const Stream s = prep(use_strong ? strong : weak, seed);
                const ProofTranscript t = run_case(sc, s, k, b, derive_seed(708, seed));
                rejected += t.verdict.kind == VerdictKind::Reject ? 1 : 0;
            }
            if (rejected <= worst_reject) {
                worst_reject = rejected;
                worst_class = behavior_name(b);
            }
            if (rejected < 45) {
                pass = false;
                detail += fmt("%s %s: rejected %zu/50; ", sc.name.c_str(), behavior_name(b), rejected);
            }
        }
        detail += fmt("%s: worst honest %zu/50, worst tamper %zu/50 (%s); ", sc.name.c_str(), worst, worst_reject,
                      worst_class.c_str());
    }
    return {pass, detail + fmt("max vcost at n=64 %zu bits (limit %zu), %.1f s", max_vcost_64, kVcostLimit,
                               seconds_since(start))};
}

Outcome layering_bound() {
    const auto start = Clock::now();
    std::size_t proofs = 0;
    std::size_t violations = 0;
    std::uint32_t max_retries = 0;
    double worst_ratio = 0;
    for (const SchemeCase& sc : kSchemes) {
        for (const auto& fx : completeness_fixtures(sc)) {
            if (!truth_for(fx.stream, fx.k, sc.mode)) {
                continue;
            }
            const std::uint32_t n = static_cast<std::uint32_t>(fx.stream.header.universe);
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                ProverConfig pc;
                pc.scheme = sc.scheme;
                pc.k = fx.k;
                pc.mode = sc.mode;
                pc.seed = derive_seed(808, seed);
                pc.public_seed = derive_seed(809, seed);
                const Proof proof = prove(fx.stream, pc);
                VerifierConfig vc;
                vc.scheme = sc.scheme;
                vc.k = fx.k;
                vc.n = n;
                vc.mode = sc.mode;
                vc.seed = derive_seed(810, seed);
                vc.public_seed = pc.public_seed;
                const auto bytes = encode_proof(proof);
                if (verify_proof(fx.stream, bytes, vc).verdict.kind != VerdictKind::Accept) {
                    continue;  // the size bound concerns accepted proofs
                }
                for (const auto& block : proof.blocks) {
                    const std::uint32_t kp = block.paths_per_vertex;
                    const double logs = std::ceil(std::log2(static_cast<double>(n) / kp));
                    const double bound = block.mode == PathMode::Vertex ? 16.0 * kp * n * logs
                                                                         : 16.0 * kp * kp * n * logs;
                    ++proofs;
                    violations += block.total_length() <= bound ? 0 : 1;
                    worst_ratio = std::max(worst_ratio, block.total_length() / bound);
                    max_retries = std::max(max_retries, block.retries);
                }
            }
        }
    }
    return {violations == 0 && max_retries <= 64 && proofs > 0,
            fmt("%zu accepted layered blocks, %zu over the bound, largest length/bound %.3f, max retries %u, %.1f s",
                proofs, violations, worst_ratio, max_retries, seconds_since(start))};
}

// ---- criterion 9 ---------------------------------------------------------

Outcome linearity() {
    Rng rng(909);
    std::size_t checks = 0;
    std::size_t failures = 0;
    for (int t = 0; t < 400; ++t, ++checks) {
        std::vector<BigInt> deltas;
        for (int i = 0; i < 50; ++i) {
            deltas.push_back(random_nonzero(rng, 200));
        }
        const std::uint64_t seed = rng.next();
        const DecisionCounter whole = counter_ingest(CounterParams{1, pow2(200)}, seed, deltas);
        const std::size_t cut = rng.below(deltas.size() + 1);
        DecisionCounter a(seed);
        DecisionCounter b(seed, a.prime());
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            (i < cut ? a : b).add(deltas[i]);
        }
        failures += counter_merge(a, b) == whole ? 0 : 1;
    }
    const SketchShape shape = SketchShape::custom(300, 3, 4);
    for (int t = 0; t < 400; ++t, ++checks) {
        const std::uint64_t seed = rng.next();
        L0Sketch whole(shape, seed);
        L0Sketch a(shape, seed);
        L0Sketch b(shape, seed);
        const std::size_t len = rng.between(1, 60);
        const std::size_t cut = rng.below(len + 1);
        for (std::size_t i = 0; i < len; ++i) {
            const std::uint64_t e = rng.below(300);
            const BigInt d = random_nonzero(rng, 150);
            whole.update(e, d);
            (i < cut ? a : b).update(e, d);
        }
        failures += sketch_merge(a, b) == whole ? 0 : 1;
    }
    for (int t = 0; t < 200; ++t, ++checks) {
        const std::uint64_t seed = rng.next();
        const Stream s = gen_random_sgt(10, pow2(100), 0.5, 0.3, seed);
        VertexSketchBank whole(10, seed);
        VertexSketchBank a(10, seed);
        VertexSketchBank b(10, seed);
        whole.ingest(s);
        const std::size_t cut = rng.below(s.tokens.size() + 1);
        for (std::size_t i = 0; i < s.tokens.size(); ++i) {
            (i < cut ? a : b).ingest(s.tokens[i]);
        }
        a.merge(b);
        failures += a == whole ? 0 : 1;
    }
    return {failures == 0, fmt("%zu split/merge checks (400 counters, 400 L0 sketches, 200 banks), %zu failures",
                               checks, failures)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"decision counter", decision_counter},
        {"strong L0 sampler", l0_sampler},
        {"support-one detector", support_one_detector},
        {"SGT spanning forest", spanning_forest_battery},
        {"k-edge-connectivity certificate", certificate_battery},
        {"distinct items", distinct_items},
        {"annotated schemes", annotated_schemes},
        {"layering size bound", layering_bound},
        {"linearity", linearity},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("criterion %zu [%s] %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                    o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
