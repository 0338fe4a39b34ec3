#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matspl/bits.hpp"

namespace matspl {

// Default cap on ground-set size; override with the MATSPL_MAX_GROUND env var.
int max_ground_size();

// An ordered list of distinct element labels.  Subsets of the ground set are
// encoded as bitmasks, bit i standing for labels()[i].
class GroundSet {
  public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    Mask full() const { return size() == 32 ? ~Mask{0} : (Mask{1} << size()) - 1; }
    const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<int> index_of(std::string_view label) const;
    Mask mask_of(std::span<const std::string> labels) const;
    std::vector<std::string> labels_of(Mask subset) const;

    // Ground set of the elements in keep, in this ground set's order.
    GroundSet restricted(Mask keep) const;

    bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }
    bool operator!=(const GroundSet& other) const { return !(*this == other); }

    // n fresh labels prefix0..prefix{n-1}.
    static GroundSet numbered(int n, const std::string& prefix = "e");

  private:
    std::vector<std::string> labels_;
};

}  // namespace matspl
