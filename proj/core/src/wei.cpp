#include "txlens/wei.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "txlens/errors.hpp"

namespace txlens {

Wei wei_from_dec(std::string_view s) {
    if (s.empty()) throw DataError("value: empty decimal string");
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw DataError("value: non-decimal character in \"" + std::string(s) + "\"");
    }
    try {
        return Wei(std::string(s));
    } catch (const std::exception&) {
        throw DataError("value: out of 256-bit range: \"" + std::string(s) + "\"");
    }
}

Wei wei_from_hex(std::string_view s) {
    if (s.size() < 3 || s[0] != '0' || (s[1] != 'x' && s[1] != 'X'))
        throw DataError("value: hex quantity must start with 0x: \"" + std::string(s) + "\"");
    for (char c : s.substr(2)) {
        if (!std::isxdigit(static_cast<unsigned char>(c)))
            throw DataError("value: bad hex digit in \"" + std::string(s) + "\"");
    }
    try {
        return Wei("0x" + std::string(s.substr(2)));
    } catch (const std::exception&) {
        throw DataError("value: out of 256-bit range: \"" + std::string(s) + "\"");
    }
}

std::string wei_to_dec(const Wei& v) { return v.str(); }

std::array<std::uint8_t, 32> wei_to_be_bytes(const Wei& v) {
    std::array<std::uint8_t, 32> out{};
    std::vector<std::uint8_t> raw;
    boost::multiprecision::export_bits(v, std::back_inserter(raw), 8);
    // export_bits yields big-endian bytes without leading zeros ("0" -> {0}).
    std::size_t n = raw.size();
    if (n == 1 && raw[0] == 0) n = 0;
    for (std::size_t i = 0; i < n; ++i) out[32 - n + i] = raw[i];
    return out;
}

Wei wei_from_be_bytes(const std::array<std::uint8_t, 32>& bytes) {
    Wei v;
    boost::multiprecision::import_bits(v, bytes.begin(), bytes.end(), 8);
    return v;
}

Wei wei_from_eth(double eth) {
    if (!std::isfinite(eth) || eth < 0.0) throw DataError("eth amount must be finite and >= 0");
    const double wei = std::floor(eth * 1e18);
    if (wei >= 0x1.0p256) throw DataError("eth amount out of 256-bit wei range");
    return static_cast<Wei>(wei);
}

}  // namespace txlens
