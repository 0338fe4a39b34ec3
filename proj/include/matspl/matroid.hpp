#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "matspl/bits.hpp"
#include "matspl/errors.hpp"
#include "matspl/ground_set.hpp"

namespace matspl {

enum class FamilyKind {
    independent,
    bases,
    circuits,
    spanning,
    flats,
    cyclic_flats,
    cyclic_sets,
    loops,
    isthmuses,
};

inline constexpr int kFamilyKindCount = 9;
const char* family_kind_name(FamilyKind kind);

// A set of subsets of a fixed ground set, as sorted masks.
struct SubsetFamily {
    GroundSet ground;
    std::vector<Mask> members;
    FamilyKind kind;

    bool contains(Mask m) const;
    bool operator==(const SubsetFamily& other) const {
        return ground == other.ground && members == other.members && kind == other.kind;
    }
};

/// A matroid given by its ground set and the full rank table indexed by
/// subset bitmask.  Instances are immutable; copies share storage.
class Matroid {
  public:
    Matroid() = default;

    const GroundSet& ground() const { return data_->ground; }
    int size() const { return data_->ground.size(); }
    Mask full() const { return data_->ground.full(); }
    int rank(Mask subset) const { return data_->table[subset]; }
    int rank() const { return data_->table[full()]; }
    const std::vector<std::uint8_t>& rank_table() const { return data_->table; }

    Mask closure(Mask subset) const;
    Mask loops() const;      // elements of rank 0
    Mask isthmuses() const;  // elements in every basis

    // Derived families are cached; the first computation wins, racers agree.
    const std::vector<Mask>& family(FamilyKind kind) const;

    bool operator==(const Matroid& other) const {
        return data_->ground == other.data_->ground && data_->table == other.data_->table;
    }
    bool operator!=(const Matroid& other) const { return !(*this == other); }

    // Trusted constructor for tables already known to satisfy the axioms.
    static Matroid unchecked(GroundSet ground, std::vector<std::uint8_t> table);

  private:
    struct Data {
        GroundSet ground;
        std::vector<std::uint8_t> table;
        mutable std::mutex cache_mutex;
        mutable std::array<std::optional<std::vector<Mask>>, kFamilyKindCount> cache;
    };

    explicit Matroid(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

    std::shared_ptr<const Data> data_;
};

// Throws AxiomViolation unless table is a matroid rank function on ground.
void validate_rank_axioms(const GroundSet& ground, const std::vector<std::uint8_t>& table);

Matroid from_rank_table(GroundSet ground, const std::vector<int>& table);
Matroid from_bases(GroundSet ground, const std::vector<Mask>& bases);
Matroid from_cyclic_flats(GroundSet ground, const std::vector<std::pair<Mask, int>>& flats_with_ranks);
Matroid uniform(GroundSet ground, int rank);
Matroid free_matroid(GroundSet ground);
Matroid rank_zero(GroundSet ground);

SubsetFamily derive(const Matroid& m, FamilyKind kind);

Matroid dual(const Matroid& m);

// Minor notation: restrict_to keeps X; contract_to contracts onto X (i.e.
// contracts the complement of X away).  deleted/contracted take the set to
// remove or to contract.
Matroid restrict_to(const Matroid& m, Mask x);
Matroid contract_to(const Matroid& m, Mask x);
Matroid deleted(const Matroid& m, Mask x);
Matroid contracted(const Matroid& m, Mask x);

Matroid direct_sum(const Matroid& m, const Matroid& p);

// Same matroid presented with its labels permuted into the given order.
Matroid reordered(const Matroid& m, const GroundSet& ground);

// Label bijection (index in m -> index in p) carrying bases to bases.
std::optional<std::vector<int>> is_isomorphic(const Matroid& m, const Matroid& p);

}  // namespace matspl
