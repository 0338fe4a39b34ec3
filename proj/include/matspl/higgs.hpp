#pragma once

#include <map>
#include <utility>

#include "matspl/matroid.hpp"

namespace matspl::higgs {

// Checks the rank-difference form of the strong order (equivalent to flat
// containment): rank_m - rank_n must be order-preserving.
bool quotient_by_ranks(const Matroid& n, const Matroid& m);

// A quotient pair (base quotient of top) together with a lift step; carries
// the ideal/filter membership tests used by the cryptomorphic views.
struct HiggsContext {
    Matroid top;   // the lift target
    Matroid base;  // the quotient being lifted
    int step;

    int diff(Mask x) const { return top.rank(x) - base.rank(x); }
    bool below(Mask x) const { return diff(x) < step; }        // order ideal
    bool at_most(Mask x) const { return diff(x) <= step; }     // order ideal
    bool above(Mask x) const { return diff(x) > step; }        // order filter
    bool at_least(Mask x) const { return diff(x) >= step; }    // order filter
    bool exact(Mask x) const { return diff(x) == step; }
    bool just_above(Mask x) const { return diff(x) == step + 1; }
};

HiggsContext make_context(const Matroid& top, const Matroid& base, int step);

// rank = min(rank_top, step + rank_base); the base itself for step < 0.
Matroid higgs_lift(const Matroid& top, const Matroid& base, int step);

// The six family views computed from the context alone (no lift table); each
// must equal the family derived from higgs_lift(top, base, step).
std::map<FamilyKind, SubsetFamily> higgs_views(const HiggsContext& ctx);

// Closure view: closure in the top for sets strictly below the step, closure
// in the base otherwise.
Mask higgs_closure(const HiggsContext& ctx, Mask x);

// (dual of the lift, lift of the duals with the complementary step).
std::pair<Matroid, Matroid> higgs_dual_pair(const Matroid& top, const Matroid& base, int step);

// i-fold principal lift of p relative to a: lift of p towards p\A with A
// freed.  i-fold principal truncation: drop the rank of A by i, freely.
Matroid principal_lift(const Matroid& p, Mask a, int fold);
Matroid principal_truncation(const Matroid& p, Mask a, int fold);

enum class MinorMode { restrict, contract };

// The lift of the minors; equals the corresponding minor of the lift.
Matroid higgs_minor(const Matroid& top, const Matroid& base, int step, Mask a, MinorMode mode);

}  // namespace matspl::higgs
