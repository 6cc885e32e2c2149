#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "txlens/labels.hpp"
#include "txlens/wei.hpp"

namespace txlens {

using Hash32 = std::array<std::uint8_t, 32>;
using Bytes = std::vector<std::uint8_t>;

// The unit flowing through the whole pipeline. Bytecode is the raw content of
// the transaction input field and may be empty (plain value transfers).
struct Transaction {
    Hash32 hash{};
    Bytes bytecode;
    Wei value{0};
    std::optional<std::int64_t> timestamp_ms;
    std::optional<ClassLabel> label;

    bool operator==(const Transaction&) const = default;
};

struct DatasetMeta {
    std::optional<std::uint64_t> seed;
    std::string generator_version;
    std::string note;
    std::string spec_json;  // generator parameters, serialized by the producer

    bool operator==(const DatasetMeta&) const = default;
    bool empty() const {
        return !seed && generator_version.empty() && note.empty() && spec_json.empty();
    }
};

struct Dataset {
    std::vector<Transaction> transactions;
    DatasetMeta meta;

    std::size_t size() const { return transactions.size(); }
    bool operator==(const Dataset&) const = default;
};

// Hex helpers shared across modules. Encoders emit lowercase "0x..." strings;
// decoders accept either case and an optional "0x" prefix.
std::string hex_encode(const std::uint8_t* data, std::size_t len);
std::string hex_encode(const Bytes& bytes);
Bytes hex_decode(std::string_view s);  // throws DataError on odd length / bad digit
std::string hash_to_hex(const Hash32& h);
Hash32 hash_from_hex(std::string_view s);  // throws DataError unless exactly 32 bytes

// Dataset file format: one flat JSON object per line (hash, bytecode, value,
// optional timestamp_ms, optional label), UTF-8, LF line endings. A
// "<path>.meta.json" sidecar carries DatasetMeta when non-empty.
Dataset load_dataset(const std::string& path);
void save_dataset(const Dataset& d, const std::string& path);

// Seeded shuffle, then split with |test| = round(test_fraction * |d|).
std::pair<Dataset, Dataset> split_dataset(const Dataset& d, double test_fraction,
                                          std::uint64_t seed);

// Seeded shuffle, then contiguous slices whose sizes differ by at most one;
// the remainder goes to the lowest-index nodes.
std::vector<Dataset> partition_equal(const Dataset& d, std::size_t node_count,
                                     std::uint64_t seed);

}  // namespace txlens
