#include "sgt/bigint.hpp"

#include <stdexcept>

namespace sgt {

BigInt parse_bigint(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) {
        throw std::invalid_argument("empty integer literal");
    }
    BigInt value = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c < '0' || c > '9') {
            throw std::invalid_argument("bad integer literal '" + std::string(text) + "'");
        }
        value *= 10;
        value += c - '0';
    }
    return negative ? BigInt(-value) : value;
}

std::string to_string(const BigInt& value, bool signed_plus) {
    std::string s = value.str();
    if (signed_plus && value > 0) {
        s.insert(s.begin(), '+');
    }
    return s;
}

unsigned bit_length(const BigInt& value) {
    if (value == 0) {
        return 0;
    }
    const BigInt mag = abs(value);
    return static_cast<unsigned>(boost::multiprecision::msb(mag)) + 1;
}

BigInt pow2(unsigned exponent) {
    BigInt v = 1;
    v <<= exponent;
    return v;
}

std::uint64_t reduce_mod(const BigInt& value, std::uint64_t p) {
    if (value.sign() == 0) {
        return 0;
    }
    // Single-limb magnitudes avoid the general division path.
    const auto& backend = value.backend();
    if (backend.size() == 1) {
        const std::uint64_t mag = static_cast<std::uint64_t>(backend.limbs()[0]) % p;
        return (value.sign() < 0 && mag != 0) ? p - mag : mag;
    }
    const BigInt mag = abs(value) % p;
    const auto r = mag.convert_to<std::uint64_t>();
    return (value.sign() < 0 && r != 0) ? p - r : r;
}

void append_bigint(std::vector<std::uint8_t>& out, const BigInt& value) {
    std::vector<std::uint8_t> mag;
    if (value != 0) {
        export_bits(BigInt(abs(value)), std::back_inserter(mag), 8, true);
    }
    out.push_back(value.sign() < 0 ? 1 : 0);
    std::size_t len = mag.size();
    // LEB128 length
    do {
        std::uint8_t byte = len & 0x7f;
        len >>= 7;
        out.push_back(static_cast<std::uint8_t>(byte | (len ? 0x80 : 0)));
    } while (len);
    out.insert(out.end(), mag.begin(), mag.end());
}

BigInt read_bigint(std::span<const std::uint8_t> bytes, std::size_t& offset) {
    auto need = [&](std::size_t k) {
        if (offset + k > bytes.size()) {
            throw std::out_of_range("truncated integer payload");
        }
    };
    need(1);
    const bool negative = bytes[offset++] != 0;
    std::size_t len = 0;
    unsigned shift = 0;
    for (;;) {
        need(1);
        const std::uint8_t b = bytes[offset++];
        if (shift > 56) {
            throw std::out_of_range("integer length overflow");
        }
        len |= static_cast<std::size_t>(b & 0x7f) << shift;
        shift += 7;
        if (!(b & 0x80)) {
            break;
        }
    }
    need(len);
    BigInt value = 0;
    if (len) {
        import_bits(value, bytes.begin() + static_cast<std::ptrdiff_t>(offset),
                    bytes.begin() + static_cast<std::ptrdiff_t>(offset + len), 8, true);
    }
    offset += len;
    return negative ? BigInt(-value) : value;
}

}  // namespace sgt
