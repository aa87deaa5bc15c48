#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sgt {

/// Signed arbitrary-precision integer used for frequencies, deltas and alpha.
using BigInt = boost::multiprecision::cpp_int;

/// Parses an optionally signed decimal integer ("+12", "-7", "300").
/// Throws std::invalid_argument on anything else.
BigInt parse_bigint(std::string_view text);

/// Decimal rendering; positive values get an explicit '+' when `signed_plus`.
std::string to_string(const BigInt& value, bool signed_plus = false);

/// Number of bits in |value| (0 for zero).
unsigned bit_length(const BigInt& value);

BigInt pow2(unsigned exponent);

/// value mod p, in [0, p), for any sign of value. p must be non-zero.
std::uint64_t reduce_mod(const BigInt& value, std::uint64_t p);

/// Sign byte + big-endian magnitude, for frame payloads.
void append_bigint(std::vector<std::uint8_t>& out, const BigInt& value);
BigInt read_bigint(std::span<const std::uint8_t> bytes, std::size_t& offset);

}  // namespace sgt
