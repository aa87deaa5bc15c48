#include "sgt/stream.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "sgt/random.hpp"

namespace sgt {

std::uint64_t StreamHeader::coordinate_count() const {
    if (model == StreamModel::Element) {
        return universe;
    }
    return universe < 2 ? 0 : universe * (universe - 1) / 2;
}

StreamToken StreamToken::element_update(std::uint64_t element, BigInt delta) {
    if (delta == 0) {
        throw std::invalid_argument("token delta must be non-zero");
    }
    StreamToken t;
    t.kind = Kind::Element;
    t.element = element;
    t.delta = std::move(delta);
    return t;
}

StreamToken StreamToken::edge_update(Vertex a, Vertex b, BigInt delta) {
    if (a == b) {
        throw std::invalid_argument("self-loop edge token");
    }
    if (delta == 0) {
        throw std::invalid_argument("token delta must be non-zero");
    }
    StreamToken t;
    t.kind = Kind::Edge;
    t.u = std::min(a, b);
    t.v = std::max(a, b);
    t.delta = std::move(delta);
    return t;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

std::uint64_t parse_index(std::string_view field) {
    if (field.empty() || field.find_first_not_of("0123456789") != std::string_view::npos) {
        throw std::invalid_argument("bad index '" + std::string(field) + "'");
    }
    const BigInt v = parse_bigint(field);
    if (v > std::numeric_limits<std::uint64_t>::max()) {
        throw std::invalid_argument("index too large");
    }
    return v.convert_to<std::uint64_t>();
}

}  // namespace

Stream parse_stream(std::string_view text) {
    Stream stream;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto fields = split_fields(line);
        if (fields.empty()) {
            continue;
        }
        try {
            if (!have_header) {
                if (fields.size() != 3 || (fields[0] != "ELEM" && fields[0] != "SGT")) {
                    throw std::invalid_argument("expected header 'ELEM <N> <alpha>' or 'SGT <n> <alpha>'");
                }
                stream.header.model = fields[0] == "ELEM" ? StreamModel::Element : StreamModel::Sgt;
                stream.header.universe = parse_index(fields[1]);
                stream.header.alpha = parse_bigint(fields[2]);
                if (stream.header.alpha < 1) {
                    throw std::invalid_argument("alpha must be at least 1");
                }
                have_header = true;
                continue;
            }
            if (stream.header.model == StreamModel::Element) {
                if (fields.size() != 2) {
                    throw std::invalid_argument("expected '<i> <delta>'");
                }
                const auto i = parse_index(fields[0]);
                if (i >= stream.header.universe) {
                    throw std::invalid_argument("element outside universe");
                }
                stream.tokens.push_back(StreamToken::element_update(i, parse_bigint(fields[1])));
            } else {
                if (fields.size() != 3) {
                    throw std::invalid_argument("expected '<u> <v> <delta>'");
                }
                const auto a = parse_index(fields[0]);
                const auto b = parse_index(fields[1]);
                if (a >= stream.header.universe || b >= stream.header.universe) {
                    throw std::invalid_argument("vertex outside universe");
                }
                stream.tokens.push_back(StreamToken::edge_update(static_cast<Vertex>(a),
                                                                 static_cast<Vertex>(b),
                                                                 parse_bigint(fields[2])));
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!have_header) {
        throw ParseError(line_no, "missing header");
    }
    return stream;
}

std::string emit_stream(const Stream& stream) {
    std::string out;
    out += stream.header.model == StreamModel::Element ? "ELEM " : "SGT ";
    out += std::to_string(stream.header.universe);
    out += ' ';
    out += to_string(stream.header.alpha);
    out += '\n';
    for (const auto& t : stream.tokens) {
        if (t.kind == StreamToken::Kind::Element) {
            out += std::to_string(t.element);
        } else {
            out += std::to_string(t.u);
            out += ' ';
            out += std::to_string(t.v);
        }
        out += ' ';
        out += to_string(t.delta, true);
        out += '\n';
    }
    return out;
}

Stream read_stream_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open stream file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_stream(buf.str());
}

namespace {

// Splits `total` into parts whose every subset sum has magnitude <= max(|total|, cap).
std::vector<BigInt> split_nonzero(const BigInt& total, Rng& rng) {
    if (abs(total) < 2 || rng.chance(0.5)) {
        return {total};
    }
    BigInt half = total / 2;
    return {half, total - half};
}

std::vector<BigInt> cancelling_updates(const BigInt& alpha, Rng& rng) {
    if (alpha >= 4 && rng.chance(0.5)) {
        const BigInt bound = alpha / 2;
        BigInt a = rng.big_between_one_and(bound);
        BigInt b = rng.big_between_one_and(bound);
        if (rng.chance(0.5)) a = -a;
        if (rng.chance(0.5)) b = -b;
        if (a + b == 0) {
            return {a, b};
        }
        return {a, b, -(a + b)};
    }
    BigInt c = rng.big_between_one_and(alpha);
    if (rng.chance(0.5)) c = -c;
    return {c, -c};
}

template <class T>
void shuffle(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[rng.below(i)]);
    }
}

}  // namespace

Stream gen_random_sgt(std::uint32_t n, const BigInt& alpha, double density,
                      double cancel_fraction, std::uint64_t seed) {
    if (n < 2) {
        throw std::invalid_argument("gen_random_sgt needs n >= 2");
    }
    if (!(density >= 0 && density <= 1) || !(cancel_fraction >= 0 && cancel_fraction <= 1)) {
        throw std::invalid_argument("density and cancel_fraction must lie in [0, 1]");
    }
    if (alpha < 1) {
        throw std::invalid_argument("alpha must be at least 1");
    }
    Rng rng(derive_seed(seed, 0x5347'5400));
    Stream s;
    s.header = {StreamModel::Sgt, n, alpha};
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (!rng.chance(density)) {
                continue;
            }
            std::vector<BigInt> parts;
            if (rng.chance(cancel_fraction)) {
                parts = cancelling_updates(alpha, rng);
            } else {
                BigInt f = rng.big_between_one_and(alpha);
                if (rng.chance(0.5)) f = -f;
                parts = split_nonzero(f, rng);
            }
            for (auto& d : parts) {
                s.tokens.push_back(StreamToken::edge_update(u, v, std::move(d)));
            }
        }
    }
    shuffle(s.tokens, rng);
    return s;
}

Stream stream_from_frequencies(const std::vector<BigInt>& freq, const BigInt& alpha,
                               std::uint64_t seed, bool cancel_zeros) {
    Rng rng(derive_seed(seed, 0xe1e3));
    Stream s;
    s.header = {StreamModel::Element, freq.size(), alpha};
    for (std::uint64_t i = 0; i < freq.size(); ++i) {
        std::vector<BigInt> parts;
        if (freq[i] != 0) {
            parts = split_nonzero(freq[i], rng);
        } else if (cancel_zeros) {
            parts = cancelling_updates(alpha, rng);
        }
        for (auto& d : parts) {
            s.tokens.push_back(StreamToken::element_update(i, std::move(d)));
        }
    }
    shuffle(s.tokens, rng);
    return s;
}

Stream stream_from_edges(std::uint32_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                         const BigInt& alpha) {
    Stream s;
    s.header = {StreamModel::Sgt, n, alpha};
    for (const auto& [a, b] : edges) {
        if (a >= n || b >= n) {
            throw std::invalid_argument("edge endpoint outside [0, n)");
        }
        s.tokens.push_back(StreamToken::edge_update(a, b, 1));
    }
    return s;
}

Stream negate(const Stream& stream) {
    Stream out = stream;
    for (auto& t : out.tokens) {
        t.delta = -t.delta;
    }
    return out;
}

void EqIdxInstance::validate() const {
    if (blocks.empty()) {
        throw std::invalid_argument("Equals-Index instance needs at least one block");
    }
    if (index < 1 || index > blocks.size()) {
        throw std::invalid_argument("Equals-Index j must lie in [1, p]");
    }
    auto check_bits = [](const std::string& s) {
        if (s.find_first_not_of("01") != std::string::npos) {
            throw std::invalid_argument("Equals-Index strings must be binary");
        }
    };
    check_bits(query);
    for (const auto& b : blocks) {
        check_bits(b);
        if (b.size() != query.size()) {
            throw std::invalid_argument("all Equals-Index blocks must have q bits");
        }
    }
    if (query.empty()) {
        throw std::invalid_argument("Equals-Index blocks must have at least one bit");
    }
}

namespace {

BigInt bits_value(std::string_view bits) {
    BigInt v = 0;
    for (char c : bits) {
        v <<= 1;
        if (c == '1') {
            v += 1;
        }
    }
    return v;
}

BigInt checked_alpha(const BigInt& alpha, std::size_t width) {
    const BigInt f = pow2(static_cast<unsigned>(width));
    if (alpha == 0) {
        return f;
    }
    if (f > alpha) {
        throw std::invalid_argument("block width exceeds the frequency bound: 2^q > alpha");
    }
    return alpha;
}

}  // namespace

Stream gen_eqidx_distinct_items(const EqIdxInstance& instance, const BigInt& alpha) {
    instance.validate();
    Stream s;
    s.header = {StreamModel::Element, instance.block_count(),
                checked_alpha(alpha, instance.block_bits())};
    for (std::size_t i = 0; i < instance.block_count(); ++i) {
        s.tokens.push_back(StreamToken::element_update(i, bits_value(instance.blocks[i]) + 1));
    }
    s.tokens.push_back(
        StreamToken::element_update(instance.index - 1, -(bits_value(instance.query) + 1)));
    return s;
}

Stream gen_eqidx_sgt_connectivity(const EqIdxInstance& instance, const BigInt& alpha) {
    instance.validate();
    const std::size_t n = instance.block_count();
    const std::size_t q = instance.block_bits();
    if (q % n != 0) {
        throw std::invalid_argument("block length must be n * log2(F)");
    }
    const std::size_t width = q / n;
    Stream s;
    s.header = {StreamModel::Sgt, 2 * n, checked_alpha(alpha, width)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t b = 0; b < n; ++b) {
            const auto sub = std::string_view(instance.blocks[i]).substr(b * width, width);
            s.tokens.push_back(StreamToken::edge_update(static_cast<Vertex>(i),
                                                        static_cast<Vertex>(n + b),
                                                        bits_value(sub) + 1));
        }
    }
    const auto j = static_cast<Vertex>(instance.index - 1);
    for (std::size_t b = 0; b < n; ++b) {
        const auto sub = std::string_view(instance.query).substr(b * width, width);
        s.tokens.push_back(
            StreamToken::edge_update(j, static_cast<Vertex>(n + b), -(bits_value(sub) + 1)));
    }
    return s;
}

Stream gen_eqidx_sgt_kconn(const EqIdxInstance& instance, std::uint32_t k, const BigInt& alpha) {
    instance.validate();
    if (k == 0) {
        throw std::invalid_argument("k must be positive");
    }
    const std::size_t p = instance.block_count();
    if (p % k != 0) {
        throw std::invalid_argument("block count must be k * n");
    }
    const auto n = static_cast<std::uint32_t>(p / k);
    if (k >= n) {
        throw std::invalid_argument("k-connectivity reduction needs k < n");
    }
    Stream s;
    s.header = {StreamModel::Sgt, n + k, checked_alpha(alpha, instance.block_bits())};
    auto pair_of = [&](std::size_t l) {
        return std::pair<Vertex, Vertex>{static_cast<Vertex>(l / k),
                                         static_cast<Vertex>(n + l % k)};
    };
    for (std::size_t l = 0; l < p; ++l) {
        const auto [a, b] = pair_of(l);
        s.tokens.push_back(StreamToken::edge_update(a, b, bits_value(instance.blocks[l]) + 1));
    }
    const auto [a, b] = pair_of(instance.index - 1);
    s.tokens.push_back(StreamToken::edge_update(a, b, -(bits_value(instance.query) + 1)));
    return s;
}

}  // namespace sgt
