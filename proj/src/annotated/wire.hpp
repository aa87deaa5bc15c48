#pragma once

// Payload encoding shared by the proof encoder and the verifier.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sgt/annotated.hpp"

namespace sgt::wire {

inline void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v) {
    do {
        std::uint8_t byte = v & 0x7f;
        v >>= 7;
        if (v) {
            byte |= 0x80;
        }
        out.push_back(byte);
    } while (v);
}

inline void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

class Cursor {
public:
    explicit Cursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::uint64_t varint() {
        std::uint64_t v = 0;
        for (unsigned shift = 0; shift < 64; shift += 7) {
            const std::uint8_t byte = u8();
            v |= std::uint64_t{byte & 0x7fU} << shift;
            if ((byte & 0x80) == 0) {
                return v;
            }
        }
        throw std::invalid_argument("varint too long");
    }

    std::uint8_t u8() {
        if (off_ >= bytes_.size()) {
            throw std::invalid_argument("frame payload truncated");
        }
        return bytes_[off_++];
    }

    std::uint64_t u64() {
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) {
            v |= std::uint64_t{u8()} << (8 * i);
        }
        return v;
    }

    BigInt bigint() { return read_bigint(bytes_, off_); }

    bool done() const { return off_ == bytes_.size(); }
    void expect_done() const {
        if (!done()) {
            throw std::invalid_argument("trailing bytes in frame payload");
        }
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t off_ = 0;
};

}  // namespace sgt::wire
