#include "matspl/higgs.hpp"

#include <algorithm>

namespace matspl::higgs {

bool quotient_by_ranks(const Matroid& n, const Matroid& m) {
    if (n.ground() != m.ground()) throw GroundMismatch();
    const Mask full = m.full();
    for (Mask x = 0; ; ++x) {
        for (int e = 0; e < m.size(); ++e) {
            Mask bit = Mask{1} << e;
            if (x & bit) continue;
            if (m.rank(x | bit) - m.rank(x) < n.rank(x | bit) - n.rank(x)) return false;
        }
        if (x == full) break;
    }
    return true;
}

HiggsContext make_context(const Matroid& top, const Matroid& base, int step) {
    if (!quotient_by_ranks(base, top)) throw NotAQuotient();
    return HiggsContext{top, base, step};
}

Matroid higgs_lift(const Matroid& top, const Matroid& base, int step) {
    if (!quotient_by_ranks(base, top)) throw NotAQuotient();
    if (step < 0) return base;
    const Mask full = top.full();
    std::vector<std::uint8_t> table(top.rank_table().size(), 0);
    for (Mask x = 0; ; ++x) {
        table[x] = static_cast<std::uint8_t>(std::min(top.rank(x), base.rank(x) + step));
        if (x == full) break;
    }
    return Matroid::unchecked(top.ground(), std::move(table));
}

std::map<FamilyKind, SubsetFamily> higgs_views(const HiggsContext& ctx) {
    if (ctx.step < 0) throw Error("views need a nonnegative step");
    const Matroid& m = ctx.top;
    const Matroid& n = ctx.base;
    std::map<FamilyKind, SubsetFamily> out;

    auto put = [&](FamilyKind kind, std::vector<Mask> members) {
        std::sort(members.begin(), members.end());
        out.emplace(kind, SubsetFamily{m.ground(), std::move(members), kind});
    };

    std::vector<Mask> indep, spanning, bases, circuits, flats, zs;
    for (Mask x : m.family(FamilyKind::independent))
        if (ctx.at_most(x)) indep.push_back(x);
    for (Mask x : n.family(FamilyKind::spanning))
        if (ctx.at_least(x)) spanning.push_back(x);
    for (Mask x : indep)
        if (ctx.exact(x) && n.rank(x) == n.rank()) bases.push_back(x);

    for (Mask x : m.family(FamilyKind::circuits))
        if (ctx.at_most(x)) circuits.push_back(x);
    {
        const auto& cyc_n = n.family(FamilyKind::cyclic_sets);
        for (Mask x : m.family(FamilyKind::independent))
            if (ctx.just_above(x) && std::binary_search(cyc_n.begin(), cyc_n.end(), x))
                circuits.push_back(x);
    }

    for (Mask x : m.family(FamilyKind::flats))
        if (ctx.below(x)) flats.push_back(x);
    for (Mask x : n.family(FamilyKind::flats)) flats.push_back(x);
    std::sort(flats.begin(), flats.end());
    flats.erase(std::unique(flats.begin(), flats.end()), flats.end());

    {
        const auto& zm = m.family(FamilyKind::cyclic_flats);
        const auto& zn = n.family(FamilyKind::cyclic_flats);
        for (Mask z : zm) {
            if (ctx.below(z)) zs.push_back(z);
            else if (std::binary_search(zn.begin(), zn.end(), z)) zs.push_back(z);
        }
        for (Mask z : zn)
            if (ctx.above(z)) zs.push_back(z);
        std::sort(zs.begin(), zs.end());
        zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
    }

    put(FamilyKind::independent, std::move(indep));
    put(FamilyKind::spanning, std::move(spanning));
    put(FamilyKind::bases, std::move(bases));
    put(FamilyKind::circuits, std::move(circuits));
    put(FamilyKind::flats, std::move(flats));
    put(FamilyKind::cyclic_flats, std::move(zs));
    return out;
}

Mask higgs_closure(const HiggsContext& ctx, Mask x) {
    return ctx.below(x) ? ctx.top.closure(x) : ctx.base.closure(x);
}

std::pair<Matroid, Matroid> higgs_dual_pair(const Matroid& top, const Matroid& base, int step) {
    int co_step = top.rank() - base.rank() - step;
    return {dual(higgs_lift(top, base, step)), higgs_lift(dual(base), dual(top), co_step)};
}

Matroid principal_lift(const Matroid& p, Mask a, int fold) {
    if (!is_subset(a, p.full())) throw Error("set not inside the ground set");
    const Mask full = p.full();
    std::vector<std::uint8_t> table(p.rank_table().size(), 0);
    for (Mask x = 0; ; ++x) {
        table[x] = static_cast<std::uint8_t>(p.rank(x & ~a) + popcount(x & a));
        if (x == full) break;
    }
    Matroid freed = Matroid::unchecked(p.ground(), std::move(table));
    return higgs_lift(freed, p, fold);
}

Matroid principal_truncation(const Matroid& p, Mask a, int fold) {
    if (!is_subset(a, p.full())) throw Error("set not inside the ground set");
    const Mask full = p.full();
    const int ra = p.rank(a);
    std::vector<std::uint8_t> table(p.rank_table().size(), 0);
    for (Mask x = 0; ; ++x) {
        table[x] = static_cast<std::uint8_t>(p.rank(x | a) - ra);
        if (x == full) break;
    }
    Matroid collapsed = Matroid::unchecked(p.ground(), std::move(table));
    return higgs_lift(p, collapsed, ra - fold);
}

Matroid higgs_minor(const Matroid& top, const Matroid& base, int step, Mask a, MinorMode mode) {
    if (!quotient_by_ranks(base, top)) throw NotAQuotient();
    if (mode == MinorMode::restrict)
        return higgs_lift(restrict_to(top, a), restrict_to(base, a), step);
    int k = top.rank(a) - base.rank(a);
    return higgs_lift(contracted(top, a), contracted(base, a), step - k);
}

}  // namespace matspl::higgs
