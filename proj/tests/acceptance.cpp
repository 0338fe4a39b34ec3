// Acceptance suite: one deterministic check per criterion, one line each.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <set>

#include "matspl/algebra.hpp"
#include "matspl/constructions.hpp"
#include "matspl/enumeration.hpp"
#include "matspl/factor.hpp"
#include "matspl/gf.hpp"
#include "matspl/higgs.hpp"
#include "matspl/orders.hpp"
#include "matspl/sampling.hpp"
#include "matspl/splice.hpp"

using namespace matspl;

namespace {

Matroid relabel(const Matroid& m, const std::vector<std::string>& labels) {
    return Matroid::unchecked(GroundSet(labels), m.rank_table());
}

Mask mask_of(const GroundSet& g, std::initializer_list<const char*> names) {
    Mask out = 0;
    for (const char* s : names) out |= Mask{1} << *g.index_of(s);
    return out;
}

// ---------------------------------------------------------------------------
// 1. The running example has exactly three splices; the free one is the
//    plane whose only nonspanning circuit is {a,b,c}.
bool example_splice_enumeration() {
    Matroid m = uniform(GroundSet({"a", "b", "c"}), 2);
    GroundSet gn({"b", "c", "d", "e"});
    Matroid n = from_cyclic_flats(gn, {{0, 0}, {mask_of(gn, {"b", "c"}), 1}, {gn.full(), 2}});
    auto pair = splice::matched_or_throw(m, n);
    auto splices = splice::enumerate_splices(pair);
    if (splices.size() != 3) return false;
    Matroid fs = splice::free_splice(pair);
    const GroundSet& g = fs.ground();
    std::vector<Mask> expected = {0, mask_of(g, {"a", "b", "c"}), g.full()};
    if (fs.family(FamilyKind::cyclic_flats) != expected) return false;
    int free_count = 0;
    for (const auto& l : splices) {
        if (!orders::weak_leq(l, fs)) return false;
        if (l == fs) ++free_count;
    }
    return free_count == 1;
}

// ---------------------------------------------------------------------------
// 2. All seven cryptomorphic views of the Higgs lift agree with the families
//    derived from its rank table, for 200 random quotient pairs and all steps.
bool higgs_cryptomorphisms() {
    sampling::Rng rng(20240201);
    for (int t = 0; t < 200; ++t) {
        GroundSet g = GroundSet::numbered(sampling::pick(rng, 1, 7));
        auto [m, n] = sampling::random_quotient_pair(rng, g);
        for (int i = 0; i <= m.rank() - n.rank(); ++i) {
            Matroid lift = higgs::higgs_lift(m, n, i);
            auto ctx = higgs::make_context(m, n, i);
            for (auto& [kind, fam] : higgs::higgs_views(ctx))
                if (fam.members != lift.family(kind)) return false;
            for (Mask x = 0; x <= g.full(); ++x)
                if (higgs::higgs_closure(ctx, x) != lift.closure(x)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 3. Duality identities: the dual of a free splice swaps the factors, and
//    the dual of a Higgs lift is the complementary lift of the duals.
bool duality_identities() {
    sampling::Rng rng(20240202);
    for (int t = 0; t < 500; ++t) {
        {
            GroundSet g = GroundSet::numbered(sampling::pick(rng, 1, 8));
            auto pair = sampling::random_matched_pair(rng, g);
            Matroid lhs = dual(splice::free_splice(pair));
            Matroid rhs = splice::free_splice(dual(pair.right()), dual(pair.left()));
            if (reordered(rhs, lhs.ground()) != lhs) return false;
        }
        {
            GroundSet g = GroundSet::numbered(sampling::pick(rng, 1, 8));
            auto [m, n] = sampling::random_quotient_pair(rng, g);
            int span = m.rank() - n.rank();
            int i = sampling::pick(rng, 0, span);
            auto [lhs, rhs] = higgs::higgs_dual_pair(m, n, i);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 4. Free-separator characterization and the pairwise irreducibility test,
//    exhaustively over every matroid on up to five elements and every cover.
bool free_separator_theorem() {
    for (int n = 1; n <= 5; ++n) {
        GroundSet g = GroundSet::numbered(n);
        bool ok = true;
        enumeration::for_each_matroid(g, [&](const Matroid& l) {
            if (!ok) return;
            Mask full = l.full();
            bool has_nontrivial = false;
            for (Mask a = 0; ; ++a) {
                for_each_subset(a, [&](Mask extra) {
                    Mask b = (full & ~a) | extra;
                    bool by_flats = factor::is_free_separator(l, a, b);
                    if (by_flats != (splice::splice_closure(l, a, b) == l)) ok = false;
                    if (by_flats && (a & ~b) != 0 && (b & ~a) != 0) has_nontrivial = true;
                });
                if (a == full) break;
            }
            if (factor::is_irreducible(l) != !has_nontrivial) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// 5. The vamos cube is the free splice of its deletion at b and its
//    contraction by b'.
bool vamos_factorization() {
    Matroid v8 = constructions::vamos();
    const GroundSet& g = v8.ground();
    Matroid left = deleted(v8, mask_of(g, {"b"}));
    Matroid right = contracted(v8, mask_of(g, {"b'"}));
    Matroid joined = splice::free_splice(left, right);
    return reordered(joined, g) == v8;
}

// ---------------------------------------------------------------------------
// 6. Minor theorem: the lifted-factor formulas, their simple special cases,
//    and the exact modular-pair conditions, exhaustively over X for 50 pairs.
bool minor_theorem() {
    sampling::Rng rng(20240203);
    for (int t = 0; t < 50; ++t) {
        GroundSet g = GroundSet::numbered(sampling::pick(rng, 1, 7));
        auto pair = sampling::random_matched_pair(rng, g);
        const Matroid& m = pair.left();
        const Matroid& n = pair.right();
        Matroid fs = splice::free_splice(pair);
        const int i = pair.left_only_rank();
        for (Mask x = 0; x <= pair.full(); ++x) {
            Mask xa = x & pair.a_mask();
            Mask xb_r = pair.to_right(x);
            Matroid expect_r = restrict_to(fs, x);
            {
                int j = i - m.rank(x & ~pair.b_mask());
                Matroid m1_x = restrict_to(splice::isthmus_extension(pair), x);
                Mask xb_in = m1_x.ground().mask_of(std::span<const std::string>(
                    pair.ground().labels_of(x & pair.b_mask())));
                Matroid top = contract_to(m1_x, xb_in);
                Matroid bottom = restrict_to(n, xb_r);
                if (bottom.ground() != top.ground()) bottom = reordered(bottom, top.ground());
                Matroid rhs = splice::free_splice(restrict_to(m, xa),
                                                  higgs::higgs_lift(top, bottom, j));
                if (reordered(rhs, expect_r.ground()) != expect_r) return false;
            }
            Matroid expect_c = contract_to(fs, x);
            {
                int k = i - m.rank(pair.a_mask() & ~x) +
                        n.rank(pair.to_right(pair.b_mask() & ~x)) -
                        popcount(pair.b_mask() & ~pair.a_mask() & ~x);
                Matroid n0_x = contract_to(splice::loop_extension(pair), x);
                Mask xa_in = n0_x.ground().mask_of(
                    std::span<const std::string>(pair.ground().labels_of(xa)));
                Matroid bottom = restrict_to(n0_x, xa_in);
                Matroid top = contract_to(m, xa);
                if (bottom.ground() != top.ground()) bottom = reordered(bottom, top.ground());
                Matroid rhs = splice::free_splice(higgs::higgs_lift(top, bottom, k),
                                                  contract_to(n, xb_r));
                if (reordered(rhs, expect_c.ground()) != expect_c) return false;
            }
            {
                auto sub = splice::matched(restrict_to(m, xa), restrict_to(n, xb_r));
                bool equal_r = sub && reordered(splice::free_splice(*sub),
                                                expect_r.ground()) == expect_r;
                bool cond_a = m.rank(pair.left_only()) == m.rank(x & ~pair.b_mask());
                Matroid nx = restrict_to(n, xb_r);
                Mask x_minus_a = nx.ground().mask_of(std::span<const std::string>(
                    pair.ground().labels_of(x & ~pair.a_mask())));
                bool cond_b = is_subset(x_minus_a, nx.isthmuses()) &&
                              orders::modular_pair(m, pair.left_only(), xa);
                if (equal_r != (cond_a || cond_b)) return false;
                if (is_subset(pair.left_only(), x) && !equal_r) return false;
            }
            {
                auto sub = splice::matched(contract_to(m, xa), contract_to(n, xb_r));
                bool equal_c = sub && reordered(splice::free_splice(*sub),
                                                expect_c.ground()) == expect_c;
                Mask keep = pair.b_mask() & ~(x & ~pair.a_mask());
                Matroid nb = restrict_to(n, pair.to_right(keep));
                Mask missing = nb.ground().mask_of(std::span<const std::string>(
                    pair.ground().labels_of(pair.right_only() & ~x)));
                bool cond_ap = is_subset(missing, nb.isthmuses());
                Matroid mx = contract_to(m, xa);
                Mask x_minus_b = mx.ground().mask_of(std::span<const std::string>(
                    pair.ground().labels_of(x & ~pair.b_mask())));
                bool cond_bp = is_subset(x_minus_b, mx.loops()) &&
                               orders::modular_pair(n, pair.to_right(pair.overlap()),
                                                    pair.to_right(pair.b_mask() & ~x));
                if (equal_c != (cond_ap || cond_bp)) return false;
                if (is_subset(pair.right_only(), x) && !equal_c) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 7. Associativity characterization: predicted verdict equals the direct
//    product comparison on an exhaustive tiny sweep and on 300 random
//    hypothesis-satisfying triples, with at least one non-associative case.
bool associativity_characterization() {
    auto four_hypotheses = [](const Matroid& m, const Matroid& n, const Matroid& p) {
        auto mn = splice::matched(m, n);
        if (!mn) return false;
        if (!splice::matched(splice::free_splice(*mn), p)) return false;
        auto np = splice::matched(n, p);
        if (!np) return false;
        return splice::matched(m, splice::free_splice(*np)).has_value();
    };

    int broken = 0;
    bool consistent = true;
    auto sweep = [&](const GroundSet& a, const GroundSet& b, const GroundSet& c) {
        auto on_a = enumeration::all_matroids(a);
        auto on_b = enumeration::all_matroids(b);
        auto on_c = enumeration::all_matroids(c);
        for (const auto& m : on_a)
            for (const auto& n : on_b)
                for (const auto& p : on_c) {
                    if (!four_hypotheses(m, n, p)) continue;
                    auto report = algebra::associativity_report(m, n, p);
                    if (report.predicted != report.actual) consistent = false;
                    if (!report.actual) ++broken;
                }
    };
    sweep(GroundSet({"x", "u"}), GroundSet({"u", "v"}), GroundSet({"v", "x"}));
    sweep(GroundSet({"x"}), GroundSet({"u", "v"}), GroundSet({"x"}));
    sweep(GroundSet({"x", "y"}), GroundSet({"u", "v"}), GroundSet({"x"}));
    if (!consistent) return false;

    sampling::Rng rng(20240204);
    std::vector<std::array<GroundSet, 3>> patterns = {
        {GroundSet({"x", "u"}), GroundSet({"u", "v"}), GroundSet({"v", "x"})},
        {GroundSet({"x"}), GroundSet({"u", "v"}), GroundSet({"x"})},
        {GroundSet({"x", "y"}), GroundSet({"u", "v"}), GroundSet({"x", "u"})},
        {GroundSet({"x", "t", "u"}), GroundSet({"t", "u", "v"}), GroundSet({"x", "t", "v"})},
    };
    int done = 0, attempts = 0;
    while (done < 300 && attempts < 300000) {
        ++attempts;
        auto& pat = patterns[rng() % patterns.size()];
        auto triple = sampling::random_triple_seed(rng, pat[0], pat[1], pat[2]);
        if (!four_hypotheses(triple.m, triple.n, triple.p)) continue;
        ++done;
        auto report = algebra::associativity_report(triple.m, triple.n, triple.p);
        if (report.predicted != report.actual) return false;
        if (!report.actual) ++broken;
    }
    return done >= 300 && broken > 0;
}

// ---------------------------------------------------------------------------
// 8. Up to isomorphism there are 2^n nested matroids on n elements, 1..5.
bool nested_matroid_count() {
    for (int n = 1; n <= 5; ++n) {
        std::vector<Matroid> reps;
        enumeration::for_each_matroid(GroundSet::numbered(n), [&](const Matroid& m) {
            if (!factor::is_nested(m)) return;
            for (const auto& r : reps)
                if (is_isomorphic(m, r)) return;
            reps.push_back(m);
        });
        if (static_cast<int>(reps.size()) != (1 << n)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// 9. Class membership: the vamos cube and the rank-2 truncation of three
//    two-point lines decompose into single elements; the edge bicircular
//    matroid on five vertices and M(K4) are irreducible.
bool class_membership() {
    if (!factor::splice_decomposition(constructions::vamos()).has_value()) return false;

    Matroid sum = direct_sum(direct_sum(uniform(GroundSet({"a1", "a2"}), 1),
                                        uniform(GroundSet({"b1", "b2"}), 1)),
                             uniform(GroundSet({"c1", "c2"}), 1));
    Matroid truncated = higgs::principal_truncation(sum, sum.full(), 1);
    if (truncated.rank() != 2) return false;
    if (!factor::splice_decomposition(truncated).has_value()) return false;

    Matroid b5 = constructions::simplex_bicircular_edges(5);
    if (!factor::is_irreducible(b5)) return false;
    if (factor::splice_decomposition(b5).has_value()) return false;

    return factor::is_irreducible(constructions::complete_graph(4));
}

// ---------------------------------------------------------------------------
// 10. Block splice representations over GF(2) and GF(3) verify as splices on
//     20 random representable matched pairs per field.
bool splice_representations() {
    sampling::Rng rng(20240205);
    for (int p : {2, 3}) {
        int done = 0;
        while (done < 20) {
            int n = sampling::pick(rng, 2, 8);
            gf::GFMatrix mat;
            mat.p = p;
            mat.rows = sampling::pick(rng, 1, 4);
            mat.cols = n;
            for (int i = 0; i < n; ++i) mat.col_labels.push_back("e" + std::to_string(i));
            mat.entries.resize(static_cast<size_t>(mat.rows) * n);
            for (auto& e : mat.entries)
                e = static_cast<std::uint8_t>(rng() % static_cast<unsigned>(p));

            Matroid l = gf::column_matroid(mat);
            auto [a, b] = sampling::random_cover(rng, l.full());
            gf::GFMatrix rep_m = gf::restrict_columns(mat, a);
            gf::GFMatrix rep_n = gf::contract_columns(mat, l.full() & ~b);
            gf::GFMatrix out = gf::splice_representation(rep_m, rep_n);

            Matroid joined = gf::column_matroid(out);
            Matroid m = gf::column_matroid(rep_m);
            Matroid n_side = gf::column_matroid(rep_n);
            Mask a_in =
                joined.ground().mask_of(std::span<const std::string>(m.ground().labels()));
            Mask b_in = joined.ground().mask_of(
                std::span<const std::string>(n_side.ground().labels()));
            if (restrict_to(joined, a_in) != m) return false;
            if (reordered(contract_to(joined, b_in), n_side.ground()) != n_side) return false;
            ++done;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 11. Every way of writing the projective plane or M(K4) as a Higgs lift of a
//     proper quotient toward a proper lift is the one-step principal pair.
bool factorization_hypothesis() {
    auto fano_report =
        constructions::higgs_factorization_report(constructions::projective_geometry(3, 2));
    if (!fano_report.hypothesis_holds || fano_report.factorizations.size() != 7) return false;
    auto k4_report =
        constructions::higgs_factorization_report(constructions::complete_graph(4));
    return k4_report.hypothesis_holds && k4_report.factorizations.size() == 6;
}

// ---------------------------------------------------------------------------
// 12. Every splice of the projective plane with the rank-2 collapse of the
//     lines through a point has a five-point line minor.
bool five_point_line_instance() {
    Matroid fano = constructions::projective_geometry(3, 2);
    Mask a_bit = 1;
    std::vector<std::string> n_labels;
    for (int i = 1; i < 7; ++i) n_labels.push_back(fano.ground().label(i));
    n_labels.push_back("x");
    GroundSet gn(n_labels);
    std::vector<std::pair<Mask, int>> zs = {{0, 0}};
    for (Mask f : fano.family(FamilyKind::flats)) {
        if (fano.rank(f) != 2 || !(f & a_bit)) continue;
        zs.emplace_back(gn.mask_of(std::span<const std::string>(
                            fano.ground().labels_of(f & ~a_bit))),
                        1);
    }
    zs.emplace_back(gn.full(), 2);
    Matroid n = from_cyclic_flats(gn, zs);

    auto pair = splice::matched_or_throw(fano, n);
    auto splices = splice::enumerate_splices(pair);
    if (splices.size() != 5) return false;  // free in the plane, or on a line missing a
    int free_placement = 0, line_placement = 0;
    for (const auto& l : splices) {
        if (!constructions::has_uniform_line_minor(l, 5)) return false;
        // Contracting the new point counts the lines through it: 7 when it
        // went in freely, 5 when it landed on one of the four lines.
        Mask x_bit = Mask{1} << *l.ground().index_of("x");
        Matroid through_x = contracted(l, x_bit);
        std::set<Mask> points;
        for (int e = 0; e < through_x.size(); ++e) {
            Mask bit = Mask{1} << e;
            if (through_x.rank(bit) > 0) points.insert(through_x.closure(bit));
        }
        if (points.size() == 7) ++free_placement;
        if (points.size() == 5) ++line_placement;
    }
    return free_placement == 1 && line_placement == 4;
}

// ---------------------------------------------------------------------------
// 13. Parallel connections: ten constructed irreducible pairs stay
//     irreducible, and the chained-connection example is reducible-factors,
//     irreducible-connection.
bool parallel_connection_irreducibility() {
    Matroid k4 = constructions::complete_graph(4);
    Matroid fano = constructions::projective_geometry(3, 2);
    Matroid fano_dual = dual(fano);
    Matroid b5 = constructions::simplex_bicircular_edges(5);

    auto at_point = [](const Matroid& m, const Matroid& n) {
        std::vector<std::string> labels;
        labels.push_back(m.ground().label(0));
        for (int i = 1; i < n.size(); ++i) labels.push_back("r" + std::to_string(i));
        return std::pair(m, relabel(n, labels));
    };
    auto share_line = [](const Matroid& m, const Matroid& n, Mask m_line, Mask n_line) {
        auto line_labels = m.ground().labels_of(m_line);
        std::vector<std::string> labels;
        size_t next = 0;
        for (int i = 0; i < n.size(); ++i) {
            if (n_line & (Mask{1} << i)) labels.push_back(line_labels[next++]);
            else labels.push_back("r" + std::to_string(i));
        }
        return std::pair(m, relabel(n, labels));
    };
    auto first_line = [](const Matroid& m) {
        for (Mask f : m.family(FamilyKind::flats))
            if (m.rank(f) == 2 && popcount(f) == 3) return f;
        return Mask{0};
    };

    std::vector<std::pair<Matroid, Matroid>> pairs;
    pairs.push_back(at_point(k4, k4));
    pairs.push_back(at_point(k4, fano));
    pairs.push_back(at_point(fano, fano));
    pairs.push_back(at_point(fano_dual, k4));
    pairs.push_back(at_point(fano, fano_dual));
    pairs.push_back(at_point(fano_dual, fano_dual));
    pairs.push_back(at_point(b5, k4));
    pairs.push_back(at_point(b5, fano));
    pairs.push_back(share_line(k4, k4, first_line(k4), first_line(k4)));
    pairs.push_back(share_line(fano, fano, first_line(fano), first_line(fano)));
    pairs.push_back(share_line(fano, k4, first_line(fano), first_line(k4)));

    int verified = 0;
    for (const auto& [m, n] : pairs) {
        if (!factor::is_irreducible(m) || !factor::is_irreducible(n)) return false;
        Matroid joined = splice::gpc(m, n);
        if (!factor::is_irreducible(joined)) return false;
        ++verified;
    }
    if (verified < 10) return false;

    // The chained example: U_{2,3} on {a,b,p}, parallel-connected with a copy
    // of M(K4) at a and another at b, is reducible; connecting two copies of
    // that matroid at p is irreducible.
    Matroid u23 = uniform(GroundSet({"a", "b", "p"}), 2);
    Matroid k4a = relabel(k4, {"a", "a2", "a3", "a4", "a5", "a6"});
    Matroid k4b = relabel(k4, {"b", "b2", "b3", "b4", "b5", "b6"});
    Matroid chained = splice::gpc(splice::gpc(u23, k4a), k4b);
    if (chained.size() != 13 || chained.rank() != 6) return false;
    if (factor::is_irreducible(chained)) return false;
    Mask p_bit = Mask{1} << *chained.ground().index_of("p");
    Mask a_bit = Mask{1} << *chained.ground().index_of("a");
    for (Mask z : chained.family(FamilyKind::cyclic_flats))
        if ((z & p_bit) && !(z & a_bit)) return false;

    std::vector<std::string> mirrored;
    for (const auto& l : chained.ground().labels())
        mirrored.push_back(l == "p" ? l : l + "'");
    auto [ground, flats] = splice::gpc_flats(chained, relabel(chained, mirrored));
    if (ground.size() != 25) return false;
    auto zs = factor::cyclic_flats_of_flat_family(flats);
    return factor::irreducible_from_cyclic_flats(ground.size(), zs);
}

struct Criterion {
    int number;
    const char* description;
    bool (*run)();
};

}  // namespace

int main() {
    // The chained parallel connection of criterion 13 lives on 25 elements.
    setenv("MATSPL_MAX_GROUND", "26", 1);

    const Criterion criteria[] = {
        {1, "running example has exactly three splices", example_splice_enumeration},
        {2, "Higgs lift cryptomorphisms match derived families", higgs_cryptomorphisms},
        {3, "duality identities for splices and lifts", duality_identities},
        {4, "free-separator characterization, exhaustive to five elements",
         free_separator_theorem},
        {5, "vamos cube splits at its clone pair", vamos_factorization},
        {6, "minor formulas and their exact special cases", minor_theorem},
        {7, "associativity characterization with a non-associative witness",
         associativity_characterization},
        {8, "2^n nested matroids on n elements up to isomorphism", nested_matroid_count},
        {9, "class membership of vamos, truncation, bicircular, M(K4)", class_membership},
        {10, "verified splice representations over GF(2) and GF(3)", splice_representations},
        {11, "all Higgs factorizations of the plane and M(K4) are principal",
         factorization_hypothesis},
        {12, "every splice in the five-point-line instance leaves U(3)",
         five_point_line_instance},
        {13, "parallel connections of irreducibles stay irreducible",
         parallel_connection_irreducibility},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string error;
        try {
            ok = criterion.run();
        } catch (const std::exception& e) {
            error = std::string(" error: ") + e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %2d: %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", criterion.number,
                    criterion.description, seconds, error.c_str());
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
