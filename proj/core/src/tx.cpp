#include "txlens/tx.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "txlens/errors.hpp"
#include "txlens/rng.hpp"

namespace txlens {

namespace {

using ordered_json = nlohmann::ordered_json;

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::string meta_path_for(const std::string& path) { return path + ".meta.json"; }

Transaction record_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw DataError("record is not a JSON object");
    Transaction tx;

    if (!j.contains("hash") || !j["hash"].is_string()) throw DataError("missing hash");
    tx.hash = hash_from_hex(j["hash"].get<std::string>());

    if (!j.contains("bytecode") || !j["bytecode"].is_string()) throw DataError("missing bytecode");
    tx.bytecode = hex_decode(j["bytecode"].get<std::string>());

    if (!j.contains("value") || !j["value"].is_string())
        throw DataError("missing value (decimal string)");
    tx.value = wei_from_dec(j["value"].get<std::string>());

    if (j.contains("timestamp_ms")) {
        const auto& t = j["timestamp_ms"];
        if (!t.is_number_integer() || t.get<std::int64_t>() < 0)
            throw DataError("timestamp_ms must be a non-negative integer");
        tx.timestamp_ms = t.get<std::int64_t>();
    }
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw DataError("label must be a string");
        const auto name = j["label"].get<std::string>();
        const auto l = class_from_name(name);
        if (!l) throw DataError("unknown label \"" + name + "\"");
        tx.label = *l;
    }
    return tx;
}

ordered_json record_to_json(const Transaction& tx) {
    ordered_json j;
    j["hash"] = hash_to_hex(tx.hash);
    j["bytecode"] = hex_encode(tx.bytecode);
    j["value"] = wei_to_dec(tx.value);
    if (tx.timestamp_ms) j["timestamp_ms"] = *tx.timestamp_ms;
    if (tx.label) j["label"] = std::string(class_name(*tx.label));
    return j;
}

}  // namespace

std::string hex_encode(const std::uint8_t* data, std::size_t len) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out = "0x";
    out.reserve(2 + 2 * len);
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(digits[data[i] >> 4]);
        out.push_back(digits[data[i] & 0xF]);
    }
    return out;
}

std::string hex_encode(const Bytes& bytes) { return hex_encode(bytes.data(), bytes.size()); }

Bytes hex_decode(std::string_view s) {
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
    if (s.size() % 2 != 0) throw DataError("hex string has odd length");
    Bytes out(s.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int hi = hex_nibble(s[2 * i]);
        const int lo = hex_nibble(s[2 * i + 1]);
        if (hi < 0 || lo < 0) throw DataError("bad hex digit");
        out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
    }
    return out;
}

std::string hash_to_hex(const Hash32& h) { return hex_encode(h.data(), h.size()); }

Hash32 hash_from_hex(std::string_view s) {
    const Bytes raw = hex_decode(s);
    if (raw.size() != 32)
        throw DataError("hash must be exactly 32 bytes, got " + std::to_string(raw.size()));
    Hash32 out;
    std::copy(raw.begin(), raw.end(), out.begin());
    return out;
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open dataset file: " + path);

    Dataset d;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) throw RecordError(line_no, "invalid JSON");
        try {
            d.transactions.push_back(record_from_json(j));
        } catch (const DataError& e) {
            throw RecordError(line_no, e.what());
        }
    }

    const auto meta_path = meta_path_for(path);
    if (std::filesystem::exists(meta_path)) {
        std::ifstream min(meta_path, std::ios::binary);
        std::stringstream buf;
        buf << min.rdbuf();
        const auto j = ordered_json::parse(buf.str(), nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw DataError("invalid dataset meta file: " + meta_path);
        if (j.contains("seed")) d.meta.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("generator_version"))
            d.meta.generator_version = j["generator_version"].get<std::string>();
        if (j.contains("note")) d.meta.note = j["note"].get<std::string>();
        if (j.contains("gen_spec")) d.meta.spec_json = j["gen_spec"].dump();
    }
    return d;
}

void save_dataset(const Dataset& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write dataset file: " + path);
    for (const auto& tx : d.transactions) out << record_to_json(tx).dump() << '\n';
    out.flush();
    if (!out) throw IoError("short write to dataset file: " + path);

    if (!d.meta.empty()) {
        ordered_json j;
        if (d.meta.seed) j["seed"] = *d.meta.seed;
        if (!d.meta.generator_version.empty()) j["generator_version"] = d.meta.generator_version;
        if (!d.meta.note.empty()) j["note"] = d.meta.note;
        if (!d.meta.spec_json.empty()) j["gen_spec"] = ordered_json::parse(d.meta.spec_json);
        std::ofstream mout(meta_path_for(path), std::ios::binary | std::ios::trunc);
        if (!mout) throw IoError("cannot write dataset meta file: " + meta_path_for(path));
        mout << j.dump(2) << '\n';
    }
}

std::pair<Dataset, Dataset> split_dataset(const Dataset& d, double test_fraction,
                                          std::uint64_t seed) {
    if (!(test_fraction >= 0.0 && test_fraction <= 1.0))
        throw DataError("test_fraction must lie in [0, 1]");

    std::vector<Transaction> pool = d.transactions;
    SplitMix64 rng(seed);
    seeded_shuffle(pool, rng);

    const auto n_test = static_cast<std::size_t>(
        std::llround(test_fraction * static_cast<double>(pool.size())));

    Dataset test{{pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n_test)}, d.meta};
    Dataset train{{pool.begin() + static_cast<std::ptrdiff_t>(n_test), pool.end()}, d.meta};
    return {std::move(train), std::move(test)};
}

std::vector<Dataset> partition_equal(const Dataset& d, std::size_t node_count,
                                     std::uint64_t seed) {
    if (node_count == 0) throw DataError("node_count must be >= 1");

    std::vector<Transaction> pool = d.transactions;
    SplitMix64 rng(seed);
    seeded_shuffle(pool, rng);

    const std::size_t base = pool.size() / node_count;
    const std::size_t rem = pool.size() % node_count;

    std::vector<Dataset> parts;
    parts.reserve(node_count);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < node_count; ++i) {
        const std::size_t len = base + (i < rem ? 1 : 0);
        parts.push_back(Dataset{{pool.begin() + static_cast<std::ptrdiff_t>(offset),
                                 pool.begin() + static_cast<std::ptrdiff_t>(offset + len)},
                                d.meta});
        offset += len;
    }
    return parts;
}

}  // namespace txlens
