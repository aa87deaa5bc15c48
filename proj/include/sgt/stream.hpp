#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgt/bigint.hpp"

namespace sgt {

using Vertex = std::uint32_t;

enum class StreamModel { Element, Sgt };

struct StreamHeader {
    StreamModel model = StreamModel::Element;
    /// N for the element model, vertex count n for SGT.
    std::uint64_t universe = 0;
    BigInt alpha = 1;

    /// Number of coordinates of the frequency vector: N, or n(n-1)/2 edge slots.
    std::uint64_t coordinate_count() const;

    friend bool operator==(const StreamHeader&, const StreamHeader&) = default;
};

/// One signed update. Edge endpoints are kept with the smaller vertex first.
struct StreamToken {
    enum class Kind { Element, Edge };

    Kind kind = Kind::Element;
    std::uint64_t element = 0;
    Vertex u = 0;
    Vertex v = 0;
    BigInt delta;

    static StreamToken element_update(std::uint64_t element, BigInt delta);
    /// Canonicalizes (a, b) to (min, max). Throws on a == b or delta == 0.
    static StreamToken edge_update(Vertex a, Vertex b, BigInt delta);

    friend bool operator==(const StreamToken&, const StreamToken&) = default;
};

struct Stream {
    StreamHeader header;
    std::vector<StreamToken> tokens;

    friend bool operator==(const Stream&, const Stream&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Reads the text stream format:
///   ELEM <N> <alpha> | SGT <n> <alpha>
///   <i> <+-delta>    | <u> <v> <+-delta>
/// '#' starts a comment; blank lines are ignored.
Stream parse_stream(std::string_view text);
std::string emit_stream(const Stream& stream);

Stream read_stream_file(const std::string& path);

/// Random SGT stream. Each edge slot is touched with probability `density`;
/// a touched slot is cancelled (updates summing to zero) with probability
/// `cancel_fraction`, otherwise it ends with a non-zero frequency in
/// [-alpha, alpha]. Running frequencies never leave [-alpha, alpha].
Stream gen_random_sgt(std::uint32_t n, const BigInt& alpha, double density,
                      double cancel_fraction, std::uint64_t seed);

/// Random element stream with the given exact frequency vector (zero entries
/// are emitted as cancelling pairs when `cancel_zeros`). Tokens are shuffled;
/// no partial sum of any coordinate exceeds max |freq|.
Stream stream_from_frequencies(const std::vector<BigInt>& freq, const BigInt& alpha,
                               std::uint64_t seed, bool cancel_zeros = false);

/// Dynamic-style SGT stream with one +1 token per listed edge.
Stream stream_from_edges(std::uint32_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                         const BigInt& alpha = 1);

/// Flips the sign of every delta.
Stream negate(const Stream& stream);

/// Equals-Index instance: p blocks of q bits, a query y and a 1-based index j.
/// Bit strings are most-significant-bit first ("10" is the number 2).
struct EqIdxInstance {
    std::vector<std::string> blocks;
    std::string query;
    std::size_t index = 1;

    std::size_t block_count() const { return blocks.size(); }
    std::size_t block_bits() const { return query.size(); }
    /// Throws std::invalid_argument if blocks are ragged, bits are not 0/1 or j is out of range.
    void validate() const;
    bool answer() const { return blocks.at(index - 1) == query; }
};

/// x_i + 1 insertions of element i-1, then y + 1 deletions of element j-1.
/// Distinct count is N-1 iff x_j = y. Requires 2^q <= alpha (alpha defaults to 2^q).
Stream gen_eqidx_distinct_items(const EqIdxInstance& instance, const BigInt& alpha = 0);

/// Bipartite reduction on n + n vertices: block i splits into n sub-blocks of
/// log2(F) bits; edge (i-1, n+b) gets x_{i,b}+1 insertions and left vertex j-1 loses
/// y_b+1 on each. Support graph is connected iff x_j != y.
Stream gen_eqidx_sgt_connectivity(const EqIdxInstance& instance, const BigInt& alpha = 0);

/// Bipartite reduction with n left vertices and k right vertices (block l is the
/// edge (l / k, n + l % k)). Support graph is K_{n,k}, minus the j-th edge iff x_j = y;
/// it is k-vertex- and k-edge-connected iff x_j != y. Requires p = k * n, k < n.
Stream gen_eqidx_sgt_kconn(const EqIdxInstance& instance, std::uint32_t k,
                           const BigInt& alpha = 0);

}  // namespace sgt
