#pragma once

#include <cstdint>
#include <vector>

#include "sgt/graph.hpp"
#include "sgt/graph_sketch.hpp"
#include "sgt/stream.hpp"

namespace sgt {

struct CertParams {
    std::uint32_t n = 0;
    std::uint32_t k = 1;
    /// r = ceil(constant * k * ln n) independent sub-banks.
    double constant = 20.0;
    std::uint64_t seed = 0;

    std::uint32_t sub_banks() const;
    /// Sketch shape of every sub-bank.
    SketchShape shape() const;
};

/// Union of the spanning forests of r independently subsampled support graphs.
struct Certificate {
    std::uint32_t n = 0;
    std::uint32_t k = 1;
    std::uint32_t r = 0;
    std::vector<Edge> edges;  // sorted, distinct

    Graph graph() const { return Graph(n, edges); }
};

/// Whether sub-bank i keeps the edge slot (rate 1/k, pure in seed, i and slot).
bool cert_filter_admits(const CertParams& params, std::uint32_t i, std::uint64_t slot);

/// All r sub-banks in memory at once.
class CertificateState {
public:
    explicit CertificateState(const CertParams& params);

    void ingest(Vertex a, Vertex b, const BigInt& delta);
    void ingest(const StreamToken& token);
    void ingest(const Stream& stream);
    void merge(const CertificateState& other);

    const CertParams& params() const noexcept { return params_; }
    const VertexSketchBank& bank(std::uint32_t i) const { return banks_.at(i); }
    std::uint32_t sub_banks() const noexcept { return static_cast<std::uint32_t>(banks_.size()); }

    friend bool operator==(const CertificateState& a, const CertificateState& b) {
        return a.banks_ == b.banks_;
    }

private:
    CertParams params_;
    std::vector<VertexSketchBank> banks_;
};

Certificate cert_extract(const CertificateState& state);

/// Same certificate as ingesting into a CertificateState and extracting, but
/// holds one sub-bank at a time.
Certificate certify_stream(const Stream& stream, const CertParams& params);

/// Certificate pipeline followed by an exact min-cut test of H.
bool k_edge_connected(const Stream& stream, std::uint32_t k, std::uint64_t seed,
                      double constant = 20.0);

}  // namespace sgt
