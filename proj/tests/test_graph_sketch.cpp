#include <algorithm>

#include "doctest.h"
#include "sgt/graph_sketch.hpp"
#include "sgt/kconn_cert.hpp"
#include "sgt/oracles.hpp"
#include "sgt/random.hpp"

using namespace sgt;

namespace {

bool edges_in_support(const std::vector<Edge>& edges, const ExactGraph& exact) {
    return std::all_of(edges.begin(), edges.end(),
                       [&](const Edge& e) { return exact.freq.count(edge_slot(e.first, e.second)) == 1; });
}

Stream from_graph(const Graph& g) { return stream_from_edges(g.vertex_count(), g.edges()); }

}  // namespace

TEST_CASE("bank updates cancel and merge") {
    VertexSketchBank bank(6, 3);
    const VertexSketchBank fresh(6, 3);
    bank.ingest(1, 4, 9);
    CHECK_FALSE(bank == fresh);
    bank.ingest(4, 1, -9);
    CHECK(bank == fresh);
    CHECK_THROWS_AS(bank.ingest(2, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(bank.ingest(2, 6, 1), std::out_of_range);

    // Endpoint sketches of one edge cancel when merged.
    VertexSketchBank single(3, 5);
    single.ingest(1, 2, 7);
    L0Sketch merged = single.sketch(1, 0);
    merged.merge(single.sketch(2, 0));
    CHECK_FALSE(merged.sample());
    CHECK(single.sketch(1, 0).sample() == std::optional<std::uint64_t>(edge_slot(1, 2)));

    const Stream s = gen_random_sgt(12, pow2(64), 0.5, 0.3, 2);
    VertexSketchBank whole(12, 4);
    whole.ingest(s);
    Rng rng(1);
    for (int t = 0; t < 10; ++t) {
        const std::size_t cut = rng.below(s.tokens.size() + 1);
        VertexSketchBank a(12, 4);
        VertexSketchBank b(12, 4);
        for (std::size_t i = 0; i < s.tokens.size(); ++i) {
            (i < cut ? a : b).ingest(s.tokens[i]);
        }
        a.merge(b);
        CHECK(a == whole);
    }
}

TEST_CASE("spanning forest examples") {
    VertexSketchBank path(4, 1);
    path.ingest(from_graph(graphs::path(4)));
    const Forest f = spanning_forest(path);
    CHECK(f.edges.size() == 3);
    CHECK(f.components().size() == 1);

    VertexSketchBank empty(8, 1);
    empty.ingest(gen_random_sgt(8, 100, 1.0, 1.0, 5));
    CHECK(spanning_forest(empty).edges.empty());
    CHECK(spanning_forest(empty).components().size() == 8);

    VertexSketchBank k8(8, 2);
    k8.ingest(from_graph(graphs::complete(8)));
    CHECK(is_connected(k8));
    CHECK(is_connected(VertexSketchBank(1, 0)));

    const EqIdxInstance inst{{"01", "11"}, "01", 1};
    const Stream eq = gen_eqidx_sgt_connectivity(inst);
    VertexSketchBank eqb(static_cast<std::uint32_t>(eq.header.universe), 3);
    eqb.ingest(eq);
    CHECK_FALSE(is_connected(eqb));
}

TEST_CASE("spanning forest matches oracle components") {
    int matched = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Stream s = gen_random_sgt(40, pow2(128), 0.08, 0.3, seed);
        const ExactGraph exact = exact_support(s);
        VertexSketchBank bank(40, seed);
        bank.ingest(s);
        const Forest f = spanning_forest(bank);
        CHECK(edges_in_support(f.edges, exact));
        matched += f.components() == components(exact.support()) ? 1 : 0;
    }
    CHECK(matched >= 28);
}

TEST_CASE("certificate filter and linearity") {
    CertParams one{10, 1, 20.0, 3};
    for (std::uint32_t i = 0; i < one.sub_banks(); ++i) {
        for (std::uint64_t slot = 0; slot < slot_count(10); ++slot) {
            CHECK(cert_filter_admits(one, i, slot));
        }
    }

    CertParams p{10, 3, 2.0, 4};
    CertificateState st(p);
    const CertificateState fresh(p);
    std::optional<std::uint32_t> filtered;
    for (std::uint32_t i = 0; i < p.sub_banks() && !filtered; ++i) {
        if (!cert_filter_admits(p, i, edge_slot(2, 7))) {
            filtered = i;
        }
    }
    REQUIRE(filtered);
    st.ingest(2, 7, 5);
    CHECK(st.bank(*filtered) == fresh.bank(*filtered));

    const Stream s = gen_random_sgt(10, 1000, 0.6, 0.2, 8);
    CertificateState whole(p);
    whole.ingest(s);
    CertificateState a(p);
    CertificateState b(p);
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
        (i % 3 ? a : b).ingest(s.tokens[i]);
    }
    a.merge(b);
    CHECK(a == whole);
    const Certificate c1 = cert_extract(whole);
    const Certificate c2 = certify_stream(s, p);
    CHECK(c1.edges == c2.edges);
}

TEST_CASE("certificate examples") {
    Stream empty;
    empty.header = {StreamModel::Sgt, 6, 1};
    CHECK(certify_stream(empty, CertParams{6, 2, 20.0, 1}).edges.empty());

    const Certificate k6 = certify_stream(from_graph(graphs::complete(6)), CertParams{6, 3, 20.0, 1});
    CHECK(min_cut(k6.graph()) >= 3);
    CHECK(k6.edges.size() <= std::size_t{k6.r} * 5);
    CHECK(edges_in_support(k6.edges, exact_support(from_graph(graphs::complete(6)))));

    std::vector<std::string> blocks{"01", "10", "11", "00", "01", "10"};
    const Stream eq = gen_eqidx_sgt_kconn(EqIdxInstance{blocks, "11", 3}, 2);
    const Certificate h = certify_stream(eq, CertParams{5, 2, 20.0, 2});
    CHECK(min_cut(h.graph()) < 2);
    const GlobalCut cut = min_cut_with_side(h.graph());
    // The small cut of H is also small in G.
    const Graph g = exact_support(eq).support();
    std::size_t crossing = 0;
    for (const auto& [a, b] : g.edges()) {
        crossing += std::binary_search(cut.side.begin(), cut.side.end(), a) !=
                            std::binary_search(cut.side.begin(), cut.side.end(), b)
                        ? 1
                        : 0;
    }
    CHECK(crossing < 2);

    CHECK(k_edge_connected(from_graph(graphs::cycle(8)), 2, 1));
    CHECK_FALSE(k_edge_connected(from_graph(graphs::cycle(8)), 3, 1));
    Graph triangles(6);
    for (Vertex base : {0U, 3U}) {
        triangles.add_edge(base, base + 1);
        triangles.add_edge(base + 1, base + 2);
        triangles.add_edge(base, base + 2);
    }
    CHECK_FALSE(k_edge_connected(from_graph(triangles), 1, 1));
    const Graph k6m = graphs::complete_minus_matching(6, 1);
    CHECK_FALSE(k_edge_connected(from_graph(k6m), 5, 1));
    CHECK(k_edge_connected(from_graph(k6m), 4, 1));
    CHECK(min_cut(k6m) == 4);
}
