#include "matspl/sampling.hpp"

#include <algorithm>

#include "matspl/constructions.hpp"
#include "matspl/gf.hpp"
#include "matspl/higgs.hpp"

namespace matspl::sampling {

int pick(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

namespace {

Matroid random_nested(Rng& rng, const GroundSet& ground) {
    // Iterated free products of single loops and isthmuses.
    Matroid m = uniform(GroundSet({ground.label(0)}), pick(rng, 0, 1));
    for (int i = 1; i < ground.size(); ++i) {
        Matroid single = uniform(GroundSet({ground.label(i)}), pick(rng, 0, 1));
        m = splice::free_product(m, single);
    }
    return m;
}

Matroid random_gf(Rng& rng, const GroundSet& ground) {
    gf::GFMatrix mat;
    mat.p = rng() % 2 == 0 ? 2 : 3;
    mat.rows = pick(rng, 1, std::max(1, std::min(5, ground.size())));
    mat.cols = ground.size();
    mat.col_labels = ground.labels();
    mat.entries.resize(static_cast<size_t>(mat.rows) * mat.cols);
    for (auto& e : mat.entries) e = static_cast<std::uint8_t>(rng() % static_cast<unsigned>(mat.p));
    return gf::column_matroid(mat);
}

Matroid random_transversal(Rng& rng, const GroundSet& ground) {
    constructions::SetSystem system{ground, {}};
    int sets = pick(rng, 1, std::max(1, ground.size()));
    for (int s = 0; s < sets; ++s)
        system.sets.push_back(static_cast<Mask>(rng()) & ground.full());
    return constructions::transversal(system);
}

Matroid random_graphic(Rng& rng, const GroundSet& ground) {
    int nv = pick(rng, 1, std::max(1, ground.size()));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < ground.size(); ++i)
        edges.emplace_back("v" + std::to_string(pick(rng, 0, nv - 1)),
                           "v" + std::to_string(pick(rng, 0, nv - 1)));
    return constructions::graphic(edges, ground.labels());
}

}  // namespace

Matroid random_matroid(Rng& rng, const GroundSet& ground) {
    if (ground.size() == 0) return uniform(ground, 0);
    Matroid m = [&] {
        switch (pick(rng, 0, 4)) {
            case 0: return uniform(ground, pick(rng, 0, ground.size()));
            case 1: return random_nested(rng, ground);
            case 2: return random_gf(rng, ground);
            case 3: return random_transversal(rng, ground);
            default: return random_graphic(rng, ground);
        }
    }();
    if (ground.size() > 0 && pick(rng, 0, 3) == 0) m = reordered(dual(m), ground);
    if (m.rank() > 1 && pick(rng, 0, 3) == 0)
        m = higgs::principal_truncation(m, m.full(), pick(rng, 1, m.rank() - 1));
    return m;
}

std::pair<Matroid, Matroid> random_quotient_pair(Rng& rng, const GroundSet& ground) {
    int extra = pick(rng, 0, 3);
    std::vector<std::string> labels = ground.labels();
    for (int i = 0; i < extra; ++i) labels.push_back("&q" + std::to_string(i));
    GroundSet big(labels);
    Matroid k = random_matroid(rng, big);
    Mask keep = ground.size() == 0 ? 0 : (Mask{1} << ground.size()) - 1;
    return {restrict_to(k, keep), contract_to(k, keep)};
}

std::pair<Mask, Mask> random_cover(Rng& rng, Mask full) {
    Mask a = static_cast<Mask>(rng()) & full;
    Mask b = (full & ~a) | (static_cast<Mask>(rng()) & full);
    return {a, b};
}

splice::MatchedPair random_matched_pair(Rng& rng, const GroundSet& ground) {
    Matroid l = random_matroid(rng, ground);
    auto [a, b] = random_cover(rng, ground.full());
    Matroid m = restrict_to(l, a);
    Matroid n = contract_to(l, b);
    auto pair = splice::matched(m, n);
    // Restriction/contraction of one matroid is always matched.
    return *pair;
}

Triple random_triple_seed(Rng& rng, const GroundSet& a, const GroundSet& b, const GroundSet& c) {
    std::vector<std::string> ab_labels = a.labels();
    for (const auto& l : b.labels())
        if (!a.index_of(l)) ab_labels.push_back(l);
    GroundSet ab(ab_labels);

    Matroid q = random_matroid(rng, ab);
    Mask a_in_ab = ab.mask_of(std::span<const std::string>(a.labels()));
    Mask b_in_ab = ab.mask_of(std::span<const std::string>(b.labels()));
    Matroid m = restrict_to(q, a_in_ab);
    Matroid n = contract_to(q, b_in_ab);

    Matroid joined = splice::free_splice(m, n);
    Mask v = 0;
    for (const auto& l : c.labels())
        if (auto idx = joined.ground().index_of(l)) v |= Mask{1} << *idx;
    Matroid w = contract_to(joined, v);

    // Extend w to a random matroid on c with the prescribed restriction.
    Mask o = static_cast<Mask>(rng()) & w.full();
    std::vector<std::string> rest_labels;
    for (const auto& l : c.labels())
        if (!w.ground().index_of(l)) rest_labels.push_back(l);
    Matroid p = w;
    if (!rest_labels.empty() || o != w.full()) {
        Matroid z = rest_labels.empty() ? uniform(GroundSet(std::vector<std::string>{}), 0)
                                        : random_matroid(rng, GroundSet(rest_labels));
        Matroid y = rest_labels.empty() ? contract_to(w, o)
                                        : splice::free_product(contract_to(w, o), z);
        p = splice::free_splice(w, y);
    }
    return {m, n, p};
}

std::vector<Matroid> corpus(Rng& rng, int max_size, int random_count) {
    std::vector<Matroid> out;
    auto add = [&](Matroid m) {
        if (m.size() <= max_size) out.push_back(std::move(m));
    };
    add(uniform(GroundSet::numbered(1), 0));
    add(uniform(GroundSet::numbered(1), 1));
    add(uniform(GroundSet::numbered(3), 2));
    add(uniform(GroundSet::numbered(4), 2));
    add(free_matroid(GroundSet::numbered(4)));
    add(rank_zero(GroundSet::numbered(3)));
    add(constructions::complete_graph(4));
    add(constructions::wheel(3));
    add(constructions::whirl(3));
    add(constructions::projective_geometry(3, 2));
    add(dual(constructions::projective_geometry(3, 2)));
    add(constructions::vamos());
    for (int i = 0; i < random_count; ++i) {
        int n = pick(rng, 1, max_size);
        add(random_matroid(rng, GroundSet::numbered(n)));
    }
    return out;
}

}  // namespace matspl::sampling
