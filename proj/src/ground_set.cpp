#include "matspl/ground_set.hpp"

#include <cstdlib>
#include <set>

#include "matspl/errors.hpp"

namespace matspl {

int max_ground_size() {
    static const int cap = [] {
        if (const char* env = std::getenv("MATSPL_MAX_GROUND")) {
            int v = std::atoi(env);
            if (v >= 0 && v <= 31) return v;
        }
        return 16;
    }();
    return cap;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) > max_ground_size())
        throw SizeCapExceeded("ground set of " + std::to_string(labels_.size()) +
                              " elements exceeds cap " + std::to_string(max_ground_size()));
    std::set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second) throw LabelCollision(l);
}

std::optional<int> GroundSet::index_of(std::string_view label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return std::nullopt;
}

Mask GroundSet::mask_of(std::span<const std::string> labels) const {
    Mask m = 0;
    for (const auto& l : labels) {
        auto idx = index_of(l);
        if (!idx) throw Error("unknown label: " + l);
        m |= Mask{1} << *idx;
    }
    return m;
}

std::vector<std::string> GroundSet::labels_of(Mask subset) const {
    std::vector<std::string> out;
    for (int i = 0; i < size(); ++i)
        if (subset & (Mask{1} << i)) out.push_back(labels_[static_cast<size_t>(i)]);
    return out;
}

GroundSet GroundSet::restricted(Mask keep) const {
    return GroundSet(labels_of(keep));
}

GroundSet GroundSet::numbered(int n, const std::string& prefix) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    return GroundSet(std::move(labels));
}

}  // namespace matspl
