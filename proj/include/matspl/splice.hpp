#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "matspl/matroid.hpp"

namespace matspl::splice {

inline constexpr int kDefaultEnumerationCap = 8;

// Matroids M(A), N(B) that agree on the overlap: M.(A&B) = N|(A&B).
// Joint masks live on the union ground set: A's labels in M's order followed
// by the labels of B-A in N's order, so subsets of A keep their encoding.
class MatchedPair {
  public:
    const Matroid& left() const { return left_; }    // M on A
    const Matroid& right() const { return right_; }  // N on B
    const GroundSet& ground() const { return uni_; }

    Mask full() const { return uni_.full(); }
    Mask a_mask() const { return a_mask_; }
    Mask b_mask() const { return b_mask_; }
    Mask left_only() const { return a_mask_ & ~b_mask_; }   // A - B
    Mask right_only() const { return b_mask_ & ~a_mask_; }  // B - A
    Mask overlap() const { return a_mask_ & b_mask_; }

    int left_only_rank() const { return left_only_rank_; }            // rk_M(A-B)
    int splice_rank() const { return left_only_rank_ + right_.rank(); }

    int rank_left(Mask x) const { return left_.rank(x & a_mask_); }
    int rank_right(Mask x) const { return right_.rank(to_right(x & b_mask_)); }
    Mask to_right(Mask x) const;    // union coords -> N coords
    Mask from_right(Mask x) const;  // N coords -> union coords

  private:
    friend std::optional<MatchedPair> matched(const Matroid& m, const Matroid& n);

    Matroid left_, right_;
    GroundSet uni_;
    Mask a_mask_ = 0, b_mask_ = 0;
    int left_only_rank_ = 0;
    std::vector<Mask> uni_bit_to_right_;  // per union position, N-coords bit or 0
    std::vector<Mask> right_bit_to_uni_;
};

std::optional<MatchedPair> matched(const Matroid& m, const Matroid& n);
MatchedPair matched_or_throw(const Matroid& m, const Matroid& n);

// M with the elements of B-A adjoined as isthmuses, on the union ground.
Matroid isthmus_extension(const MatchedPair& pair);
// N with the elements of A-B adjoined as loops, on the union ground.
Matroid loop_extension(const MatchedPair& pair);

// The freest splice: rank min(rk_M(X&A) + |X-A|, rk_N(X&B) + rk_M(A-B)).
Matroid free_splice(const MatchedPair& pair);
Matroid free_splice(const Matroid& m, const Matroid& n);

// The six family views computed from the pair alone; each equals the family
// derived from free_splice(pair).
std::map<FamilyKind, SubsetFamily> splice_views(const MatchedPair& pair);
Mask splice_closure_view(const MatchedPair& pair, Mask x);

// All matroids L on the union with L|A = M and L.B = N, ordered by rank
// table.  Throws CapExceeded when the union exceeds cap elements.
std::vector<Matroid> enumerate_splices(const MatchedPair& pair, int cap = kDefaultEnumerationCap);

// Free splice of matroids on disjoint ground sets.
Matroid free_product(const Matroid& m, const Matroid& n);

// The two free products M|(A-B) x N and M x N.(B-A) on the union ground;
// the free splice is their matroid intersection (bases intersect).
std::pair<Matroid, Matroid> intersection_factors(const MatchedPair& pair);

// The closure operator L -> L|A join L.B on matroids over a fixed ground.
Matroid splice_closure(const Matroid& l, Mask a, Mask b);

// Generalized parallel connection along K = M|T, T the label overlap.  The
// flats of the result are the sets meeting A in a flat of M and B in a flat
// of N; the rank table is rebuilt from that flat family.
Matroid gpc(const Matroid& m, const Matroid& n);

// Flat family of the generalized parallel connection, for grounds too large
// for a rank table.  Returns the union ground and the sorted flat masks.
std::pair<GroundSet, std::vector<Mask>> gpc_flats(const Matroid& m, const Matroid& n);

// Rank table reconstruction from an intersection-closed flat family
// containing the full set (ranks are lattice heights).
Matroid matroid_from_flats(const GroundSet& ground, std::vector<Mask> flats);

}  // namespace matspl::splice
