#include <map>

#include "doctest.h"
#include "sgt/oracles.hpp"
#include "sgt/stream.hpp"

using namespace sgt;

namespace {

// Net frequencies summed token by token, independent of the oracle module.
std::map<std::uint64_t, BigInt> summed(const Stream& s) {
    std::map<std::uint64_t, BigInt> f;
    for (const auto& t : s.tokens) {
        const std::uint64_t key = t.kind == StreamToken::Kind::Edge ? edge_slot(t.u, t.v) : t.element;
        f[key] += t.delta;
    }
    std::erase_if(f, [](const auto& kv) { return kv.second == 0; });
    return f;
}

std::string bits(std::uint64_t value, std::size_t width) {
    std::string out(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        if ((value >> (width - 1 - i)) & 1U) {
            out[i] = '1';
        }
    }
    return out;
}

}  // namespace

TEST_CASE("parse element stream") {
    const Stream s = parse_stream("ELEM 4 100\n2 +3\n2 -3\n");
    CHECK(s.header.model == StreamModel::Element);
    CHECK(s.header.universe == 4);
    CHECK(s.header.alpha == 100);
    REQUIRE(s.tokens.size() == 2);
    CHECK(s.tokens[0].element == 2);
    CHECK(s.tokens[1].delta == -3);
    CHECK(parse_stream(emit_stream(s)) == s);
}

TEST_CASE("parse edge stream and reject malformed lines") {
    const Stream s = parse_stream("SGT 3 10\n1 2 +1\n");
    REQUIRE(s.tokens.size() == 1);
    CHECK(s.tokens[0].u == 1);
    CHECK(s.tokens[0].v == 2);
    CHECK(s.tokens[0].delta == 1);
    CHECK_THROWS_AS(parse_stream("SGT 3 10\n2 2 +1"), ParseError);
    CHECK_THROWS_AS(parse_stream("SGT 3 10\n0 3 +1"), ParseError);
    CHECK_THROWS_AS(parse_stream("ELEM 4 10\n4 +1"), ParseError);
    CHECK_THROWS_AS(parse_stream("1 2 +1"), ParseError);
    CHECK_THROWS_AS(parse_stream("SGT 3 0\n"), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
    const Stream s = parse_stream("# seed=7\n\nSGT 4 2 # header\n0 3 -2\n\n");
    CHECK(s.tokens.size() == 1);
    CHECK(s.tokens[0].delta == -2);
}

TEST_CASE("emit canonicalizes edge order") {
    Stream s;
    s.header = {StreamModel::Sgt, 6, 10};
    CHECK(emit_stream(s) == "SGT 6 10\n");
    s.tokens.push_back(StreamToken::edge_update(5, 2, -7));
    CHECK(emit_stream(s) == "SGT 6 10\n2 5 -7\n");
}

TEST_CASE("random SGT streams") {
    const Stream single = gen_random_sgt(2, 5, 1.0, 0.0, 3);
    CHECK(summed(single).size() == 1);

    const Stream cancelled = gen_random_sgt(8, pow2(64), 1.0, 1.0, 3);
    CHECK_FALSE(cancelled.tokens.empty());
    CHECK(exact_support(cancelled).freq.empty());

    CHECK(emit_stream(gen_random_sgt(16, 1000, 0.5, 0.3, 42)) == emit_stream(gen_random_sgt(16, 1000, 0.5, 0.3, 42)));

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Stream s = gen_random_sgt(10, pow2(80), 0.6, 0.3, seed);
        CHECK(parse_stream(emit_stream(s)) == s);
        CHECK(exact_support(s).freq == summed(s));
        // Running frequencies stay within alpha.
        std::map<std::uint64_t, BigInt> running;
        for (const auto& t : s.tokens) {
            running[edge_slot(t.u, t.v)] += t.delta;
            CHECK(abs(running[edge_slot(t.u, t.v)]) <= s.header.alpha);
        }
    }
}

TEST_CASE("negate flips every frequency") {
    const Stream s = gen_random_sgt(7, 50, 0.7, 0.2, 9);
    auto f = summed(s);
    for (auto& [k, v] : f) {
        v = -v;
    }
    CHECK(summed(negate(s)) == f);
}

TEST_CASE("stream_from_frequencies reproduces the vector") {
    std::vector<BigInt> freq{0, 5, -3, 0, pow2(100), 1};
    const Stream s = stream_from_frequencies(freq, pow2(100), 11, true);
    const auto f = summed(s);
    CHECK(f.size() == 4);
    CHECK(f.at(4) == pow2(100));
    CHECK(f.at(2) == -3);
}

TEST_CASE("distinct-items reduction examples") {
    const EqIdxInstance a{{"01", "10", "11"}, "10", 2};
    CHECK(summed(gen_eqidx_distinct_items(a)).size() == 2);
    const EqIdxInstance b{{"01", "10", "11"}, "00", 2};
    CHECK(summed(gen_eqidx_distinct_items(b)).size() == 3);
    const EqIdxInstance c{{"0"}, "0", 1};
    CHECK(summed(gen_eqidx_distinct_items(c)).empty());
    CHECK_THROWS_AS(EqIdxInstance({{"01", "1"}, "01", 1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(EqIdxInstance({{"01"}, "01", 2}).validate(), std::invalid_argument);
}

TEST_CASE("distinct-items reduction, exhaustive small instances") {
    for (std::size_t p = 1; p <= 3; ++p) {
        for (std::size_t q = 1; q <= 2; ++q) {
            const std::uint64_t values = 1ULL << q;
            std::uint64_t combos = 1;
            for (std::size_t i = 0; i < p; ++i) {
                combos *= values;
            }
            for (std::uint64_t x = 0; x < combos; ++x) {
                std::vector<std::string> blocks;
                std::uint64_t rest = x;
                for (std::size_t i = 0; i < p; ++i) {
                    blocks.push_back(bits(rest % values, q));
                    rest /= values;
                }
                for (std::uint64_t y = 0; y < values; ++y) {
                    for (std::size_t j = 1; j <= p; ++j) {
                        const EqIdxInstance inst{blocks, bits(y, q), j};
                        const auto f = summed(gen_eqidx_distinct_items(inst));
                        CHECK(f.size() == (inst.answer() ? p - 1 : p));
                    }
                }
            }
        }
    }
}

TEST_CASE("connectivity reduction matches the instance answer") {
    for (std::uint64_t x0 = 0; x0 < 4; ++x0) {
        for (std::uint64_t y = 0; y < 4; ++y) {
            const EqIdxInstance inst{{bits(x0, 2), "01"}, bits(y, 2), 1};
            const Stream s = gen_eqidx_sgt_connectivity(inst);
            const auto comps = components(exact_support(s).support());
            CHECK((comps.size() == 1) == !inst.answer());
        }
    }
    const EqIdxInstance zeros{{"000", "000", "000"}, "000", 1};
    const Graph g = exact_support(gen_eqidx_sgt_connectivity(zeros)).support();
    CHECK(g.neighbors(0).empty());
}

TEST_CASE("k-connectivity reduction") {
    const EqIdxInstance equal{{"01", "10", "11", "00", "01", "10"}, "11", 3};
    const Graph g = exact_support(gen_eqidx_sgt_kconn(equal, 2)).support();
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(min_cut(g) < 2);
    CHECK(vertex_connectivity(g) < 2);

    const EqIdxInstance differ{{"01", "10", "11", "00", "01", "10"}, "10", 3};
    const Graph h = exact_support(gen_eqidx_sgt_kconn(differ, 2)).support();
    CHECK(h == graphs::complete_bipartite(3, 2));
    CHECK(vertex_connectivity(h) >= 2);

    const EqIdxInstance small{{"1", "0"}, "0", 1};
    CHECK(components(exact_support(gen_eqidx_sgt_kconn(small, 1)).support()).size() == 1);
}
