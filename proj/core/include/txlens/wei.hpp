#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace txlens {

// Transaction value in wei. Checked 256-bit unsigned integer: any operation
// that would leave [0, 2^256) throws, which the parsers turn into DataError.
using Wei = boost::multiprecision::checked_uint256_t;

// Strict decimal parse (digits only). Throws DataError on anything else or on
// values >= 2^256.
Wei wei_from_dec(std::string_view s);

// Hex quantity with required "0x" prefix, e.g. "0xde0b6b3a7640000".
Wei wei_from_hex(std::string_view s);

std::string wei_to_dec(const Wei& v);

// Big-endian 32-byte representation, zero-padded on the left.
std::array<std::uint8_t, 32> wei_to_be_bytes(const Wei& v);
Wei wei_from_be_bytes(const std::array<std::uint8_t, 32>& bytes);

// floor(eth * 1e18); eth must be finite and non-negative.
Wei wei_from_eth(double eth);

}  // namespace txlens
