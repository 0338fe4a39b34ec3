#include "matspl/orders.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace matspl::orders {

bool weak_leq(const Matroid& n, const Matroid& m) {
    if (n.ground() != m.ground()) throw GroundMismatch();
    const Mask full = m.full();
    for (Mask x = 0; ; ++x) {
        if (n.rank(x) > m.rank(x)) return false;
        if (x == full) break;
    }
    return true;
}

bool is_quotient(const Matroid& n, const Matroid& m) {
    if (n.ground() != m.ground()) throw GroundMismatch();
    const auto& fm = m.family(FamilyKind::flats);
    for (Mask f : n.family(FamilyKind::flats))
        if (!std::binary_search(fm.begin(), fm.end(), f)) return false;
    return true;
}

bool modular_pair(const Matroid& m, Mask x, Mask y) {
    return m.rank(x) + m.rank(y) == m.rank(x | y) + m.rank(x & y);
}

bool modular_flat(const Matroid& m, Mask f) {
    const auto& flats = m.family(FamilyKind::flats);
    if (!std::binary_search(flats.begin(), flats.end(), f)) return false;
    for (Mask g : flats)
        if (!modular_pair(m, f, g)) return false;
    return true;
}

std::vector<ModularCut> modular_cuts(const Matroid& m) {
    const auto& flats = m.family(FamilyKind::flats);
    const int nf = static_cast<int>(flats.size());
    const Mask bottom = m.closure(0);

    // Sort top-down so that when a flat is decided, all its superset flats
    // already are: including a flat needs its supersets in, and excluding one
    // is illegal once two included flats have it as a modular intersection.
    std::vector<int> order(static_cast<size_t>(nf));
    for (int i = 0; i < nf; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = popcount(flats[static_cast<size_t>(a)]);
        int cb = popcount(flats[static_cast<size_t>(b)]);
        if (ca != cb) return ca > cb;
        return flats[static_cast<size_t>(a)] < flats[static_cast<size_t>(b)];
    });

    std::map<Mask, int> index;
    for (int i = 0; i < nf; ++i) index[flats[static_cast<size_t>(i)]] = i;

    // For each flat pair forming a modular pair, the index of their meet.
    struct Demand { int a, b, meet; };
    std::vector<Demand> demands;
    for (int a = 0; a < nf; ++a)
        for (int b = a + 1; b < nf; ++b) {
            Mask fa = flats[static_cast<size_t>(a)], fb = flats[static_cast<size_t>(b)];
            if (is_subset(fa, fb) || is_subset(fb, fa)) continue;
            if (modular_pair(m, fa, fb)) demands.push_back({a, b, index.at(fa & fb)});
        }
    std::vector<std::vector<std::pair<int, int>>> demands_by_meet(static_cast<size_t>(nf));
    for (const auto& d : demands)
        demands_by_meet[static_cast<size_t>(d.meet)].emplace_back(d.a, d.b);

    std::vector<ModularCut> cuts;
    std::vector<char> in_cut(static_cast<size_t>(nf), 0);

    auto dfs = [&](auto&& self, int pos) -> void {
        if (pos == nf) {
            ModularCut cut;
            for (int i = 0; i < nf; ++i)
                if (in_cut[static_cast<size_t>(i)]) cut.members.push_back(flats[static_cast<size_t>(i)]);
            if (!cut.members.empty()) {
                std::sort(cut.members.begin(), cut.members.end());
                cuts.push_back(std::move(cut));
            }
            return;
        }
        int fi = order[static_cast<size_t>(pos)];
        Mask f = flats[static_cast<size_t>(fi)];

        bool can_include = f != bottom;
        if (can_include)
            for (int j = 0; j < nf && can_include; ++j)
                if (j != fi && is_subset(f, flats[static_cast<size_t>(j)]) &&
                    !in_cut[static_cast<size_t>(j)])
                    can_include = false;
        bool can_exclude = true;
        for (const auto& [a, b] : demands_by_meet[static_cast<size_t>(fi)])
            if (in_cut[static_cast<size_t>(a)] && in_cut[static_cast<size_t>(b)]) {
                can_exclude = false;
                break;
            }

        if (can_include) {
            in_cut[static_cast<size_t>(fi)] = 1;
            self(self, pos + 1);
            in_cut[static_cast<size_t>(fi)] = 0;
        }
        if (can_exclude) self(self, pos + 1);
    };
    dfs(dfs, 0);
    return cuts;
}

std::vector<Matroid> elementary_quotients(const Matroid& m) {
    std::vector<Matroid> out;
    if (m.rank() == 0) return out;
    const Mask full = m.full();
    std::set<std::vector<std::uint8_t>> seen;
    for (const auto& cut : modular_cuts(m)) {
        std::vector<std::uint8_t> table(m.rank_table().size(), 0);
        for (Mask x = 0; ; ++x) {
            bool drop = std::binary_search(cut.members.begin(), cut.members.end(), m.closure(x));
            table[x] = static_cast<std::uint8_t>(m.rank(x) - (drop ? 1 : 0));
            if (x == full) break;
        }
        if (seen.insert(table).second) out.push_back(Matroid::unchecked(m.ground(), table));
    }
    std::sort(out.begin(), out.end(),
              [](const Matroid& a, const Matroid& b) { return a.rank_table() < b.rank_table(); });
    return out;
}

std::vector<Matroid> proper_quotients(const Matroid& m) {
    std::vector<Matroid> out;
    std::set<std::vector<std::uint8_t>> seen;
    std::vector<Matroid> frontier{m};
    while (!frontier.empty()) {
        std::vector<Matroid> next;
        for (const auto& q : frontier)
            for (const auto& eq : elementary_quotients(q))
                if (seen.insert(eq.rank_table()).second) {
                    out.push_back(eq);
                    next.push_back(eq);
                }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(),
              [](const Matroid& a, const Matroid& b) { return a.rank_table() < b.rank_table(); });
    return out;
}

}  // namespace matspl::orders
