#include "txlens/labels.hpp"

namespace txlens {

std::optional<ClassLabel> class_from_name(std::string_view name) {
    for (ClassLabel l : all_classes()) {
        if (class_name(l) == name) return l;
    }
    return std::nullopt;
}

}  // namespace txlens
