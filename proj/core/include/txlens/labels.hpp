#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace txlens {

// Detection classes in fixed index order: Normal traffic first, then the six
// attack types. The index order is load-bearing (class counts, confusion
// matrices and model outputs all use it) and must not change.
enum class ClassLabel : std::uint8_t {
    Normal = 0,
    DoS = 1,  // denial of service via block gas limit
    OaU = 2,  // integer overflow / underflow
    FoT = 3,  // flooding of transactions
    Re = 4,   // re-entrancy
    DeC = 5,  // delegatecall hijack
    FDV = 6,  // function default visibility
};

inline constexpr std::size_t kClassCount = 7;

constexpr std::array<ClassLabel, kClassCount> all_classes() {
    return {ClassLabel::Normal, ClassLabel::DoS, ClassLabel::OaU, ClassLabel::FoT,
            ClassLabel::Re,     ClassLabel::DeC, ClassLabel::FDV};
}

constexpr std::size_t class_index(ClassLabel l) { return static_cast<std::size_t>(l); }

constexpr ClassLabel class_at(std::size_t index) { return static_cast<ClassLabel>(index); }

constexpr std::string_view class_name(ClassLabel l) {
    switch (l) {
    case ClassLabel::Normal: return "Normal";
    case ClassLabel::DoS: return "DoS";
    case ClassLabel::OaU: return "OaU";
    case ClassLabel::FoT: return "FoT";
    case ClassLabel::Re: return "Re";
    case ClassLabel::DeC: return "DeC";
    case ClassLabel::FDV: return "FDV";
    }
    return "?";
}

std::optional<ClassLabel> class_from_name(std::string_view name);

}  // namespace txlens
