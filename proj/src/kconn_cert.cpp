#include "sgt/kconn_cert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sgt/oracles.hpp"
#include "sgt/random.hpp"

namespace sgt {

std::uint32_t CertParams::sub_banks() const {
    const double ln_n = std::log(static_cast<double>(std::max<std::uint32_t>(n, 2)));
    return std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::ceil(constant * k * ln_n)));
}

SketchShape CertParams::shape() const {
    return SketchShape::custom(std::max<std::uint64_t>(1, slot_count(n)), 2, 3);
}

bool cert_filter_admits(const CertParams& params, std::uint32_t i, std::uint64_t slot) {
    if (params.k <= 1) {
        return true;
    }
    const std::uint64_t threshold = std::numeric_limits<std::uint64_t>::max() / params.k;
    return prf(derive_seed(params.seed, 0xf11), i, slot) < threshold;
}

namespace {

void validate(const CertParams& params) {
    if (params.k == 0) {
        throw std::invalid_argument("k must be positive");
    }
    if (!(params.constant > 0)) {
        throw std::invalid_argument("certificate constant must be positive");
    }
}

VertexSketchBank make_sub_bank(const CertParams& params, std::uint32_t i) {
    return VertexSketchBank(params.n, derive_seed(params.seed, 0xce27, i), params.shape());
}

void add_forest(std::vector<Edge>& out, const Forest& forest) {
    out.insert(out.end(), forest.edges.begin(), forest.edges.end());
}

Certificate finish(const CertParams& params, std::uint32_t r, std::vector<Edge> edges) {
    for (auto& e : edges) {
        if (e.first > e.second) {
            std::swap(e.first, e.second);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Certificate{params.n, params.k, r, std::move(edges)};
}

}  // namespace

CertificateState::CertificateState(const CertParams& params) : params_(params) {
    validate(params_);
    const std::uint32_t r = params_.sub_banks();
    banks_.reserve(r);
    for (std::uint32_t i = 0; i < r; ++i) {
        banks_.push_back(make_sub_bank(params_, i));
    }
}

void CertificateState::ingest(Vertex a, Vertex b, const BigInt& delta) {
    if (a >= params_.n || b >= params_.n) {
        throw std::out_of_range("edge endpoint outside the certificate's vertex range");
    }
    if (a == b) {
        throw std::invalid_argument("self-loop");
    }
    const std::uint64_t slot = edge_slot(a, b);
    for (std::uint32_t i = 0; i < banks_.size(); ++i) {
        if (cert_filter_admits(params_, i, slot)) {
            banks_[i].ingest(a, b, delta);
        }
    }
}

void CertificateState::ingest(const StreamToken& token) {
    if (token.kind != StreamToken::Kind::Edge) {
        throw std::invalid_argument("certificate expects edge tokens");
    }
    ingest(token.u, token.v, token.delta);
}

void CertificateState::ingest(const Stream& stream) {
    for (const auto& tok : stream.tokens) {
        ingest(tok);
    }
}

void CertificateState::merge(const CertificateState& other) {
    if (other.banks_.size() != banks_.size()) {
        throw std::invalid_argument("cannot merge certificate states of different size");
    }
    for (std::size_t i = 0; i < banks_.size(); ++i) {
        banks_[i].merge(other.banks_[i]);
    }
}

Certificate cert_extract(const CertificateState& state) {
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < state.sub_banks(); ++i) {
        add_forest(edges, spanning_forest(state.bank(i)));
    }
    return finish(state.params(), state.sub_banks(), std::move(edges));
}

Certificate certify_stream(const Stream& stream, const CertParams& params) {
    validate(params);
    if (stream.header.model != StreamModel::Sgt || stream.header.universe != params.n) {
        throw std::invalid_argument("certificate needs an SGT stream over n vertices");
    }
    const std::uint32_t r = params.sub_banks();
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < r; ++i) {
        VertexSketchBank bank = make_sub_bank(params, i);
        for (const auto& tok : stream.tokens) {
            if (cert_filter_admits(params, i, edge_slot(tok.u, tok.v))) {
                bank.ingest(tok);
            }
        }
        add_forest(edges, spanning_forest(bank));
    }
    return finish(params, r, std::move(edges));
}

bool k_edge_connected(const Stream& stream, std::uint32_t k, std::uint64_t seed, double constant) {
    const auto n = static_cast<std::uint32_t>(stream.header.universe);
    if (n < 2) {
        return true;
    }
    const Certificate cert = certify_stream(stream, CertParams{n, k, constant, seed});
    return min_cut(cert.graph()) >= k;
}

}  // namespace sgt
