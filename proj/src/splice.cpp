#include "matspl/splice.hpp"

#include <algorithm>
#include <unordered_map>

#include "matspl/orders.hpp"

namespace matspl::splice {

namespace {

struct UnionLayout {
    GroundSet uni;
    Mask a_mask = 0, b_mask = 0;
    std::vector<Mask> uni_bit_to_right;
    std::vector<Mask> right_bit_to_uni;
};

UnionLayout make_union(const Matroid& m, const Matroid& n) {
    std::vector<std::string> labels = m.ground().labels();
    for (const auto& l : n.ground().labels())
        if (!m.ground().index_of(l)) labels.push_back(l);
    UnionLayout out;
    out.uni = GroundSet(std::move(labels));
    out.a_mask = m.size() == 0 ? 0 : (Mask{1} << m.size()) - 1;
    out.uni_bit_to_right.assign(static_cast<size_t>(out.uni.size()), 0);
    out.right_bit_to_uni.assign(static_cast<size_t>(n.size()), 0);
    for (int i = 0; i < out.uni.size(); ++i) {
        if (auto j = n.ground().index_of(out.uni.label(i))) {
            out.b_mask |= Mask{1} << i;
            out.uni_bit_to_right[static_cast<size_t>(i)] = Mask{1} << *j;
            out.right_bit_to_uni[static_cast<size_t>(*j)] = Mask{1} << i;
        }
    }
    return out;
}

Mask translate(Mask x, const std::vector<Mask>& bit_map) {
    Mask out = 0;
    while (x) {
        int b = std::countr_zero(x);
        out |= bit_map[static_cast<size_t>(b)];
        x &= x - 1;
    }
    return out;
}

}  // namespace

Mask MatchedPair::to_right(Mask x) const { return translate(x & b_mask_, uni_bit_to_right_); }
Mask MatchedPair::from_right(Mask x) const { return translate(x, right_bit_to_uni_); }

std::optional<MatchedPair> matched(const Matroid& m, const Matroid& n) {
    UnionLayout layout = make_union(m, n);
    Mask overlap = layout.a_mask & layout.b_mask;

    Mask overlap_in_m = overlap;  // subsets of A keep their encoding
    Mask overlap_in_n = translate(overlap, layout.uni_bit_to_right);
    Matroid m_side = contract_to(m, overlap_in_m);
    Matroid n_side = restrict_to(n, overlap_in_n);
    if (m_side.ground() != n_side.ground()) n_side = reordered(n_side, m_side.ground());
    if (m_side != n_side) return std::nullopt;

    MatchedPair pair;
    pair.left_ = m;
    pair.right_ = n;
    pair.uni_ = std::move(layout.uni);
    pair.a_mask_ = layout.a_mask;
    pair.b_mask_ = layout.b_mask;
    pair.uni_bit_to_right_ = std::move(layout.uni_bit_to_right);
    pair.right_bit_to_uni_ = std::move(layout.right_bit_to_uni);
    pair.left_only_rank_ = m.rank(pair.a_mask_ & ~pair.b_mask_);
    return pair;
}

MatchedPair matched_or_throw(const Matroid& m, const Matroid& n) {
    auto pair = matched(m, n);
    if (!pair) {
        std::string overlap;
        for (const auto& l : m.ground().labels())
            if (n.ground().index_of(l)) overlap += (overlap.empty() ? "" : ",") + l;
        throw NotMatched("the contraction and restriction to {" + overlap + "} differ");
    }
    return *pair;
}

Matroid isthmus_extension(const MatchedPair& pair) {
    const Mask full = pair.full();
    std::vector<std::uint8_t> table(size_t{1} << pair.ground().size(), 0);
    for (Mask x = 0; ; ++x) {
        table[x] = static_cast<std::uint8_t>(pair.rank_left(x) + popcount(x & ~pair.a_mask()));
        if (x == full) break;
    }
    return Matroid::unchecked(pair.ground(), std::move(table));
}

Matroid loop_extension(const MatchedPair& pair) {
    const Mask full = pair.full();
    std::vector<std::uint8_t> table(size_t{1} << pair.ground().size(), 0);
    for (Mask x = 0; ; ++x) {
        table[x] = static_cast<std::uint8_t>(pair.rank_right(x));
        if (x == full) break;
    }
    return Matroid::unchecked(pair.ground(), std::move(table));
}

Matroid free_splice(const MatchedPair& pair) {
    const Mask full = pair.full();
    const int i = pair.left_only_rank();
    std::vector<std::uint8_t> table(size_t{1} << pair.ground().size(), 0);
    for (Mask x = 0; ; ++x) {
        int via_left = pair.rank_left(x) + popcount(x & ~pair.a_mask());
        int via_right = pair.rank_right(x) + i;
        table[x] = static_cast<std::uint8_t>(std::min(via_left, via_right));
        if (x == full) break;
    }
    return Matroid::unchecked(pair.ground(), std::move(table));
}

Matroid free_splice(const Matroid& m, const Matroid& n) {
    return free_splice(matched_or_throw(m, n));
}

std::map<FamilyKind, SubsetFamily> splice_views(const MatchedPair& pair) {
    const Matroid& m = pair.left();
    const Matroid& n = pair.right();
    const Mask full = pair.full(), amask = pair.a_mask(), s = pair.left_only();
    const int i = pair.left_only_rank();
    const int r = pair.splice_rank();

    std::map<FamilyKind, SubsetFamily> out;
    auto put = [&](FamilyKind kind, std::vector<Mask> members) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        out.emplace(kind, SubsetFamily{pair.ground(), std::move(members), kind});
    };

    const auto& indep_m = m.family(FamilyKind::independent);
    const auto& span_n = n.family(FamilyKind::spanning);
    const auto& cyc_n = n.family(FamilyKind::cyclic_sets);
    const auto& flats_m = m.family(FamilyKind::flats);

    std::vector<Mask> indep, spanning, bases, circuits, flats, zs;
    for (Mask x = 0; ; ++x) {
        Mask xa = x & amask, xb_r = pair.to_right(x);
        bool xa_ind = std::binary_search(indep_m.begin(), indep_m.end(), xa);
        bool xb_span = std::binary_search(span_n.begin(), span_n.end(), xb_r);
        int size = popcount(x);
        if (xa_ind && size <= i + n.rank(xb_r)) indep.push_back(x);
        if (xb_span && pair.rank_left(x) + popcount(x & ~amask) >= r) spanning.push_back(x);
        if (size == r && xa_ind && xb_span) bases.push_back(x);
        if (xa_ind && n.rank(xb_r) == size - i - 1 &&
            std::binary_search(cyc_n.begin(), cyc_n.end(), xb_r))
            circuits.push_back(x);
        if (std::binary_search(flats_m.begin(), flats_m.end(), xa) &&
            m.rank(xa) + popcount(x & ~amask) < i + n.rank(xb_r))
            flats.push_back(x);
        if (x == full) break;
    }
    for (Mask c : m.family(FamilyKind::circuits)) circuits.push_back(c);
    for (Mask f : n.family(FamilyKind::flats)) flats.push_back(s | pair.from_right(f));

    const auto& zm = m.family(FamilyKind::cyclic_flats);
    const auto& zn = n.family(FamilyKind::cyclic_flats);
    for (Mask z : zm) {
        if (!is_subset(s, z)) zs.push_back(z);
        else if (std::binary_search(zn.begin(), zn.end(), pair.to_right(z))) zs.push_back(z);
    }
    for (Mask w : zn) {
        Mask z = s | pair.from_right(w);
        if (!is_subset(z, amask)) zs.push_back(z);
    }

    put(FamilyKind::independent, std::move(indep));
    put(FamilyKind::spanning, std::move(spanning));
    put(FamilyKind::bases, std::move(bases));
    put(FamilyKind::circuits, std::move(circuits));
    put(FamilyKind::flats, std::move(flats));
    put(FamilyKind::cyclic_flats, std::move(zs));
    return out;
}

Mask splice_closure_view(const MatchedPair& pair, Mask x) {
    const Mask amask = pair.a_mask();
    Mask xa = x & amask;
    if (pair.left().rank(xa) + popcount(x & ~amask) <
        pair.left_only_rank() + pair.rank_right(x))
        return pair.left().closure(xa) | x;
    return pair.from_right(pair.right().closure(pair.to_right(x))) | pair.left_only();
}

std::vector<Matroid> enumerate_splices(const MatchedPair& pair, int cap) {
    const int n = pair.ground().size();
    if (n > cap)
        throw CapExceeded("splice enumeration over " + std::to_string(n) +
                          " elements (cap " + std::to_string(cap) + ")");
    const Mask full = pair.full(), amask = pair.a_mask(), s = pair.left_only();
    Matroid top = free_splice(pair);

    const size_t count = size_t{1} << n;
    std::vector<Mask> order;
    order.reserve(count);
    for (int k = 0; k <= n; ++k)
        for (Mask x = 0; ; ++x) {
            if (popcount(x) == k) order.push_back(x);
            if (x == full) break;
        }

    std::vector<int> lower(count), upper(count);
    std::vector<char> forced(count);
    for (Mask x = 0; ; ++x) {
        upper[x] = top.rank(x);
        forced[x] = is_subset(x, amask) || is_subset(s, x);
        lower[x] = std::max(top.rank(x & amask), top.rank(x | s) - popcount(s & ~x));
        if (x == full) break;
    }
    // Propagate the forced values through monotonicity and unit increase
    // until the bounds stabilize.
    for (int pass = 0; pass < 2; ++pass) {
        for (size_t oi = count; oi-- > 0; ) {
            Mask x = order[oi];
            for (int e = 0; e < n; ++e) {
                Mask bit = Mask{1} << e;
                if (x & bit) continue;
                upper[x] = std::min(upper[x], upper[x | bit]);
                lower[x] = std::max(lower[x], lower[x | bit] - 1);
            }
        }
        for (size_t oi = 0; oi < count; ++oi) {
            Mask x = order[oi];
            Mask bits = x;
            while (bits) {
                Mask bit = bits & (0u - bits);
                lower[x] = std::max(lower[x], lower[x & ~bit]);
                upper[x] = std::min(upper[x], upper[x & ~bit] + 1);
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> r(count, -1);
    std::vector<std::vector<std::uint8_t>> tables;

    auto dfs = [&](auto&& self, size_t pos) -> void {
        if (pos == count) {
            std::vector<std::uint8_t> table(count);
            for (size_t i = 0; i < count; ++i) table[i] = static_cast<std::uint8_t>(r[i]);
            tables.push_back(std::move(table));
            return;
        }
        Mask x = order[pos];
        int lo = lower[x], hi = upper[x];
        Mask bits = x;
        while (bits) {
            Mask bit = bits & (0u - bits);
            lo = std::max(lo, r[x & ~bit]);
            hi = std::min(hi, r[x & ~bit] + 1);
            bits &= bits - 1;
        }
        if (forced[x]) {
            if (upper[x] < lo || upper[x] > hi) return;
            lo = hi = upper[x];
        }
        for (int v = lo; v <= hi; ++v) {
            bool ok = true;
            Mask eb = x;
            while (eb && ok) {
                Mask e = eb & (0u - eb);
                Mask fb = eb & (eb - 1);
                while (fb) {
                    Mask f = fb & (0u - fb);
                    if (r[x & ~e] + r[x & ~f] < v + r[x & ~e & ~f]) { ok = false; break; }
                    fb &= fb - 1;
                }
                eb &= eb - 1;
            }
            if (!ok) continue;
            r[x] = v;
            self(self, pos + 1);
            r[x] = -1;
        }
    };
    dfs(dfs, 0);

    std::sort(tables.begin(), tables.end());
    std::vector<Matroid> out;
    out.reserve(tables.size());
    for (auto& t : tables) out.push_back(Matroid::unchecked(pair.ground(), std::move(t)));
    return out;
}

Matroid free_product(const Matroid& m, const Matroid& n) {
    for (const auto& l : n.ground().labels())
        if (m.ground().index_of(l)) throw LabelCollision(l);
    return free_splice(matched_or_throw(m, n));
}

std::pair<Matroid, Matroid> intersection_factors(const MatchedPair& pair) {
    Matroid first = free_product(restrict_to(pair.left(), pair.left_only()), pair.right());
    Matroid second = free_product(
        pair.left(), contract_to(pair.right(), pair.to_right(pair.right_only())));
    return {reordered(first, pair.ground()), reordered(second, pair.ground())};
}

Matroid splice_closure(const Matroid& l, Mask a, Mask b) {
    if ((a | b) != l.full()) throw CoverageGap();
    Matroid joined = free_splice(restrict_to(l, a), contract_to(l, b));
    return reordered(joined, l.ground());
}

namespace {

void check_gpc_preconditions(const Matroid& m, const Matroid& n, const UnionLayout& layout) {
    Mask overlap = layout.a_mask & layout.b_mask;
    Mask t_in_m = overlap;
    Mask t_in_n = translate(overlap, layout.uni_bit_to_right);

    Matroid km = restrict_to(m, t_in_m);
    Matroid kn = restrict_to(n, t_in_n);
    if (kn.ground() != km.ground()) kn = reordered(kn, km.ground());
    if (km != kn)
        throw GpcPreconditionFailed("overlap restrictions differ",
                                    "M|T and N|T are different matroids");

    Mask cl_t = m.closure(t_in_m);
    if (!orders::modular_flat(m, cl_t))
        throw GpcPreconditionFailed("modularity", "closure of the overlap is not a modular flat");

    Mask extra = cl_t & ~t_in_m;
    while (extra) {
        Mask bit = extra & (0u - extra);
        if (m.rank(bit) != 0) {
            bool parallel = false;
            Mask ts = t_in_m;
            while (ts) {
                Mask tb = ts & (0u - ts);
                if (m.rank(tb) == 1 && m.rank(bit | tb) == 1) { parallel = true; break; }
                ts &= ts - 1;
            }
            if (!parallel)
                throw GpcPreconditionFailed(
                    "closure of overlap",
                    "element " + m.ground().labels_of(bit)[0] +
                        " is neither a loop nor parallel to the overlap");
        }
        extra &= extra - 1;
    }
}

}  // namespace

std::pair<GroundSet, std::vector<Mask>> gpc_flats(const Matroid& m, const Matroid& n) {
    UnionLayout layout = make_union(m, n);
    check_gpc_preconditions(m, n, layout);
    Mask overlap = layout.a_mask & layout.b_mask;

    const auto& fm = m.family(FamilyKind::flats);
    const auto& fn = n.family(FamilyKind::flats);
    std::vector<std::pair<Mask, Mask>> fn_uni;  // (flat in union coords, its overlap part)
    fn_uni.reserve(fn.size());
    for (Mask f : fn) {
        Mask u = translate(f, layout.right_bit_to_uni);
        fn_uni.emplace_back(u, u & overlap);
    }
    std::vector<Mask> flats;
    flats.reserve(fm.size());
    for (Mask fa : fm) {
        Mask fa_t = fa & overlap;
        for (const auto& [fb, fb_t] : fn_uni)
            if (fa_t == fb_t) flats.push_back(fa | fb);
    }
    std::sort(flats.begin(), flats.end());
    flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
    return {layout.uni, std::move(flats)};
}

Matroid matroid_from_flats(const GroundSet& ground, std::vector<Mask> flats) {
    std::sort(flats.begin(), flats.end());
    flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
    const Mask full = ground.full();
    if (flats.empty() || flats.back() != full)
        throw Error("flat family must contain the full set");
    if (flats.size() > 60000) throw SizeCapExceeded("flat family too large");

    const int nf = static_cast<int>(flats.size());
    std::vector<int> by_size(static_cast<size_t>(nf));
    for (int i = 0; i < nf; ++i) by_size[static_cast<size_t>(i)] = i;
    std::sort(by_size.begin(), by_size.end(), [&](int a, int b) {
        int ca = popcount(flats[static_cast<size_t>(a)]);
        int cb = popcount(flats[static_cast<size_t>(b)]);
        if (ca != cb) return ca < cb;
        return flats[static_cast<size_t>(a)] < flats[static_cast<size_t>(b)];
    });

    std::unordered_map<Mask, int> index;
    index.reserve(flats.size() * 2);
    for (int i = 0; i < nf; ++i) index[flats[static_cast<size_t>(i)]] = i;

    // Lattice heights; the flat lattice of a matroid is graded by rank.
    std::vector<int> height(static_cast<size_t>(nf), 0);
    for (int oi = 0; oi < nf; ++oi) {
        int i = by_size[static_cast<size_t>(oi)];
        int h = 0;
        for (int oj = 0; oj < oi; ++oj) {
            int j = by_size[static_cast<size_t>(oj)];
            if (flats[static_cast<size_t>(j)] != flats[static_cast<size_t>(i)] &&
                is_subset(flats[static_cast<size_t>(j)], flats[static_cast<size_t>(i)]))
                h = std::max(h, height[static_cast<size_t>(j)] + 1);
        }
        height[static_cast<size_t>(i)] = h;
    }

    // Smallest flat containing flat|bit, memoized per (flat, bit).
    std::unordered_map<std::uint64_t, int> upstep;
    auto step_up = [&](int fi, int bit_index) -> int {
        std::uint64_t key = (static_cast<std::uint64_t>(fi) << 6) | static_cast<unsigned>(bit_index);
        auto it = upstep.find(key);
        if (it != upstep.end()) return it->second;
        Mask want = flats[static_cast<size_t>(fi)] | (Mask{1} << bit_index);
        int found = -1;
        for (int oi = 0; oi < nf; ++oi) {
            int j = by_size[static_cast<size_t>(oi)];
            if (is_subset(want, flats[static_cast<size_t>(j)])) { found = j; break; }
        }
        upstep[key] = found;
        return found;
    };

    // The minimal flat is the intersection of all flats.
    Mask meet = full;
    for (Mask f : flats) meet &= f;
    const int bottom = index.at(meet);

    std::vector<int> closure_id(size_t{1} << ground.size(), -1);
    std::vector<std::uint8_t> table(size_t{1} << ground.size(), 0);
    closure_id[0] = bottom;
    table[0] = static_cast<std::uint8_t>(height[static_cast<size_t>(bottom)]);
    for (Mask x = 1; ; ++x) {
        int b = std::countr_zero(x);
        int prev = closure_id[x & (x - 1)];
        int id = (flats[static_cast<size_t>(prev)] & (Mask{1} << b)) ? prev : step_up(prev, b);
        closure_id[x] = id;
        table[x] = static_cast<std::uint8_t>(height[static_cast<size_t>(id)]);
        if (x == full) break;
    }
    return Matroid::unchecked(ground, std::move(table));
}

Matroid gpc(const Matroid& m, const Matroid& n) {
    auto [ground, flats] = gpc_flats(m, n);
    if (ground.size() > 20)
        throw SizeCapExceeded("generalized parallel connection rank table over " +
                              std::to_string(ground.size()) + " elements; use gpc_flats");
    return matroid_from_flats(ground, std::move(flats));
}

}  // namespace matspl::splice
