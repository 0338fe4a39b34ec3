#include "matspl/verify.hpp"

#include <algorithm>
#include <functional>
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

namespace matspl::verify {

namespace {

std::uint64_t fnv(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

struct Checker {
    PropertyResult result;
    sampling::Rng rng;

    Checker(const std::string& name, const Options& opt)
        : rng(opt.seed ^ fnv(name)) {
        result.name = name;
    }

    void expect(bool ok, const std::string& detail) {
        ++result.instances;
        if (!ok) {
            ++result.failures;
            if (result.note.empty()) result.note = detail;
        }
    }
};

using Property = std::function<void(Checker&, const Options&)>;
using Suite = std::vector<std::pair<std::string, Property>>;

int size_cap(const Options& opt, int hard) { return std::min(opt.n, hard); }

// ---------------------------------------------------------------- axioms --

Suite axioms_suite() {
    Suite suite;
    suite.emplace_back("constructor_axiom_validation", [](Checker& c, const Options& opt) {
        auto corpus = sampling::corpus(c.rng, size_cap(opt, 10), opt.count);
        for (const auto& m : corpus) {
            bool ok = true;
            try {
                validate_rank_axioms(m.ground(), m.rank_table());
            } catch (const Error&) {
                ok = false;
            }
            c.expect(ok, "corpus matroid fails the rank axioms");
        }
    });
    suite.emplace_back("dual_bases_are_complements", [](Checker& c, const Options& opt) {
        for (const auto& m : sampling::corpus(c.rng, size_cap(opt, 8), opt.count / 2)) {
            std::vector<Mask> complements;
            for (Mask b : m.family(FamilyKind::bases)) complements.push_back(m.full() & ~b);
            std::sort(complements.begin(), complements.end());
            c.expect(dual(m).family(FamilyKind::bases) == complements, "basis complement law");
            c.expect(dual(dual(m)) == m, "duality is an involution");
        }
    });
    suite.emplace_back("cyclic_flats_are_flats_meet_cyclic", [](Checker& c, const Options& opt) {
        for (const auto& m : sampling::corpus(c.rng, size_cap(opt, 8), opt.count / 2)) {
            auto flats = m.family(FamilyKind::flats);
            auto cyc = m.family(FamilyKind::cyclic_sets);
            std::vector<Mask> meet;
            std::set_intersection(flats.begin(), flats.end(), cyc.begin(), cyc.end(),
                                  std::back_inserter(meet));
            c.expect(meet == m.family(FamilyKind::cyclic_flats), "cyclic-flat meet law");
        }
    });
    suite.emplace_back("cyclic_flat_roundtrip", [](Checker& c, const Options& opt) {
        for (const auto& m : sampling::corpus(c.rng, size_cap(opt, 8), opt.count / 2)) {
            std::vector<std::pair<Mask, int>> zs;
            for (Mask z : m.family(FamilyKind::cyclic_flats)) zs.emplace_back(z, m.rank(z));
            bool ok = false;
            try {
                ok = from_cyclic_flats(m.ground(), zs) == m;
            } catch (const Error&) {
            }
            c.expect(ok, "cyclic-flat reconstruction");
        }
    });
    suite.emplace_back("minors_commute", [](Checker& c, const Options& opt) {
        for (const auto& m : sampling::corpus(c.rng, size_cap(opt, 6), opt.count / 3)) {
            for (int t = 0; t < 4; ++t) {
                Mask x = static_cast<Mask>(c.rng()) & m.full();
                Mask y = static_cast<Mask>(c.rng()) & m.full() & ~x;
                Matroid del_first = deleted(m, x);
                Mask y_in = del_first.ground().mask_of(
                    std::span<const std::string>(m.ground().labels_of(y)));
                Matroid a = contracted(del_first, y_in);
                Matroid con_first = contracted(m, y);
                Mask x_in = con_first.ground().mask_of(
                    std::span<const std::string>(m.ground().labels_of(x)));
                c.expect(a == deleted(con_first, x_in), "deletion and contraction commute");
            }
        }
    });
    suite.emplace_back("nested_isomorphism_count", [](Checker& c, const Options& opt) {
        for (int n = 1; n <= size_cap(opt, 4); ++n) {
            std::vector<Matroid> reps;
            enumeration::for_each_matroid(GroundSet::numbered(n), [&](const Matroid& m) {
                if (!factor::is_nested(m)) return;
                for (const auto& r : reps)
                    if (is_isomorphic(m, r)) return;
                reps.push_back(m);
            });
            c.expect(static_cast<int>(reps.size()) == (1 << n),
                     "nested matroid count at n=" + std::to_string(n));
        }
    });
    return suite;
}

// ----------------------------------------------------------------- higgs --

Suite higgs_suite() {
    Suite suite;
    suite.emplace_back("views_match_derived_families", [](Checker& c, const Options& opt) {
        for (int t = 0; t < opt.count; ++t) {
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 1, size_cap(opt, 7)));
            auto [m, n] = sampling::random_quotient_pair(c.rng, g);
            for (int i = 0; i <= m.rank() - n.rank(); ++i) {
                Matroid lift = higgs::higgs_lift(m, n, i);
                auto ctx = higgs::make_context(m, n, i);
                bool ok = true;
                for (auto& [kind, fam] : higgs::higgs_views(ctx))
                    if (fam.members != lift.family(kind)) ok = false;
                for (Mask x = 0; x <= g.full() && ok; ++x)
                    if (higgs::higgs_closure(ctx, x) != lift.closure(x)) ok = false;
                c.expect(ok, "a view differs from the derived family");
            }
        }
    });
    suite.emplace_back("dual_pair_equality", [](Checker& c, const Options& opt) {
        for (int t = 0; t < opt.count; ++t) {
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 1, size_cap(opt, 8)));
            auto [m, n] = sampling::random_quotient_pair(c.rng, g);
            for (int i = 0; i <= m.rank() - n.rank(); ++i) {
                auto [lhs, rhs] = higgs::higgs_dual_pair(m, n, i);
                c.expect(lhs == rhs, "dual of lift differs from lift of duals");
            }
        }
    });
    suite.emplace_back("ideal_complement_law", [](Checker& c, const Options& opt) {
        for (int t = 0; t < opt.count / 2; ++t) {
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 1, size_cap(opt, 6)));
            auto [m, n] = sampling::random_quotient_pair(c.rng, g);
            int span = m.rank() - n.rank();
            int i = sampling::pick(c.rng, 0, span);
            auto ctx = higgs::make_context(m, n, i);
            auto dual_ctx = higgs::make_context(dual(n), dual(m), span - i);
            bool ok = true;
            for (Mask x = 0; x <= g.full(); ++x)
                if (ctx.at_most(x) != dual_ctx.at_least(g.full() & ~x)) ok = false;
            c.expect(ok, "complement law between the order ideals");
        }
    });
    suite.emplace_back("minors_of_lifts", [](Checker& c, const Options& opt) {
        for (int t = 0; t < opt.count; ++t) {
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 1, size_cap(opt, 7)));
            auto [m, n] = sampling::random_quotient_pair(c.rng, g);
            int i = sampling::pick(c.rng, 0, std::max(0, m.rank() - n.rank()));
            Matroid lift = higgs::higgs_lift(m, n, i);
            Mask a = static_cast<Mask>(c.rng()) & g.full();
            c.expect(higgs::higgs_minor(m, n, i, a, higgs::MinorMode::restrict) ==
                         restrict_to(lift, a),
                     "restriction of a lift");
            c.expect(higgs::higgs_minor(m, n, i, a, higgs::MinorMode::contract) ==
                         contracted(lift, a),
                     "contraction of a lift");
        }
    });
    suite.emplace_back("weak_order_maximum", [](Checker& c, const Options& opt) {
        for (int n_elems = 1; n_elems <= size_cap(opt, 4); ++n_elems) {
            GroundSet g = GroundSet::numbered(n_elems);
            auto all = enumeration::all_matroids(g);
            for (int t = 0; t < 4; ++t) {
                auto [m, n] = sampling::random_quotient_pair(c.rng, g);
                for (int i = 0; i <= m.rank() - n.rank(); ++i) {
                    Matroid lift = higgs::higgs_lift(m, n, i);
                    bool ok = true;
                    for (const auto& cand : all) {
                        if (cand.rank() != n.rank() + i) continue;
                        if (!orders::is_quotient(n, cand) || !orders::is_quotient(cand, m))
                            continue;
                        if (!orders::weak_leq(cand, lift)) ok = false;
                    }
                    c.expect(ok, "an interpolant exceeds the lift");
                }
            }
        }
    });
    suite.emplace_back("order_preservation", [](Checker& c, const Options& opt) {
        int done = 0, attempts = 0;
        while (done < opt.count / 2 && attempts < opt.count * 50) {
            ++attempts;
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 1, size_cap(opt, 6)));
            auto [m, n] = sampling::random_quotient_pair(c.rng, g);
            auto [m2, n2] = sampling::random_quotient_pair(c.rng, g);
            if (!orders::weak_leq(n, n2) || !orders::weak_leq(m, m2)) continue;
            ++done;
            int i = sampling::pick(c.rng, 0, 4);
            c.expect(orders::weak_leq(higgs::higgs_lift(m, n, i), higgs::higgs_lift(m2, n2, i)),
                     "lift is not weak-order monotone");
        }
    });
    suite.emplace_back("principal_lift_truncation_duality", [](Checker& c, const Options& opt) {
        for (int t = 0; t < opt.count; ++t) {
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 1, size_cap(opt, 7)));
            Matroid m = sampling::random_matroid(c.rng, g);
            Mask a = static_cast<Mask>(c.rng()) & g.full();
            int fold = sampling::pick(c.rng, 0, g.size());
            c.expect(dual(higgs::principal_lift(m, a, fold)) ==
                         higgs::principal_truncation(dual(m), a, fold),
                     "principal duality swap");
            c.expect(higgs::principal_lift(m, a, 0) == m, "zero-fold lift is the identity");
            c.expect(higgs::principal_truncation(m, a, 0) == m,
                     "zero-fold truncation is the identity");
        }
    });
    suite.emplace_back("every_extension_lift_is_a_free_splice", [](Checker& c, const Options& opt) {
        for (int t = 0; t < opt.count / 2; ++t) {
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 1, size_cap(opt, 7)));
            auto pair = sampling::random_matched_pair(c.rng, g);
            Matroid top = splice::isthmus_extension(pair);
            Matroid base = splice::loop_extension(pair);
            int i = pair.left_only_rank();
            for (int j = -1; j <= top.rank() - base.rank() + 1; ++j) {
                Matroid lifted = higgs::higgs_lift(top, base, j);
                Matroid rhs = splice::free_splice(
                    higgs::principal_truncation(pair.left(), pair.left_only(), i - j),
                    higgs::principal_lift(pair.right(), pair.to_right(pair.right_only()),
                                          j - i));
                c.expect(lifted == reordered(rhs, pair.ground()),
                         "intermediate lift is not the stated free splice");
            }
        }
    });
    return suite;
}

// ---------------------------------------------------------------- splice --

Suite splice_suite() {
    Suite suite;
    suite.emplace_back("factors_recovered", [](Checker& c, const Options& opt) {
        for (int t = 0; t < opt.count; ++t) {
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 1, size_cap(opt, 8)));
            auto pair = sampling::random_matched_pair(c.rng, g);
            Matroid fs = splice::free_splice(pair);
            c.expect(restrict_to(fs, pair.a_mask()) == pair.left(), "left factor lost");
            c.expect(reordered(contract_to(fs, pair.b_mask()), pair.right().ground()) ==
                         pair.right(),
                     "right factor lost");
        }
    });
    suite.emplace_back("views_match_derived_families", [](Checker& c, const Options& opt) {
        for (int t = 0; t < opt.count / 2; ++t) {
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 1, size_cap(opt, 7)));
            auto pair = sampling::random_matched_pair(c.rng, g);
            Matroid fs = splice::free_splice(pair);
            bool ok = true;
            for (auto& [kind, fam] : splice::splice_views(pair))
                if (fam.members != fs.family(kind)) ok = false;
            for (Mask x = 0; x <= pair.full() && ok; ++x)
                if (splice::splice_closure_view(pair, x) != fs.closure(x)) ok = false;
            c.expect(ok, "a splice view differs from the derived family");
        }
    });
    suite.emplace_back("duality_swaps_factors", [](Checker& c, const Options& opt) {
        for (int t = 0; t < opt.count; ++t) {
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 1, size_cap(opt, 8)));
            auto pair = sampling::random_matched_pair(c.rng, g);
            Matroid lhs = dual(splice::free_splice(pair));
            Matroid rhs = splice::free_splice(dual(pair.right()), dual(pair.left()));
            c.expect(reordered(rhs, lhs.ground()) == lhs, "dual of splice mismatch");
        }
    });
    suite.emplace_back("filter_property", [](Checker& c, const Options& opt) {
        int done = 0;
        while (done < std::max(4, opt.count / 20)) {
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 2, size_cap(opt, 5)));
            auto pair = sampling::random_matched_pair(c.rng, g);
            auto splices = splice::enumerate_splices(pair);
            Matroid top = splice::isthmus_extension(pair);
            Matroid base = splice::loop_extension(pair);
            ++done;
            bool ok = true;
            enumeration::for_each_matroid(pair.ground(), [&](const Matroid& p) {
                if (p.rank() != pair.splice_rank()) return;
                if (!orders::is_quotient(base, p) || !orders::is_quotient(p, top)) return;
                bool above = false;
                for (const auto& l : splices)
                    if (orders::weak_leq(l, p)) { above = true; break; }
                if (above && std::count(splices.begin(), splices.end(), p) != 1) ok = false;
            });
            c.expect(ok, "a matroid above a splice is not a splice");
        }
    });
    suite.emplace_back("direct_sum_distribution", [](Checker& c, const Options& opt) {
        for (int t = 0; t < opt.count / 2; ++t) {
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 1, size_cap(opt, 5)));
            auto pair = sampling::random_matched_pair(c.rng, g);
            Matroid p = sampling::random_matroid(c.rng, GroundSet::numbered(2, "z"));
            Matroid lhs = direct_sum(splice::free_splice(pair), p);
            Matroid rhs = splice::free_splice(direct_sum(pair.left(), p),
                                              direct_sum(pair.right(), p));
            c.expect(reordered(rhs, lhs.ground()) == lhs, "direct-sum distribution");
        }
    });
    suite.emplace_back("minor_formulas", [](Checker& c, const Options& opt) {
        for (int t = 0; t < opt.count / 4; ++t) {
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 1, size_cap(opt, 7)));
            auto pair = sampling::random_matched_pair(c.rng, g);
            const Matroid& m = pair.left();
            const Matroid& n = pair.right();
            Matroid fs = splice::free_splice(pair);
            int i = pair.left_only_rank();
            bool ok = true;
            for (Mask x = 0; x <= pair.full() && ok; ++x) {
                Mask xa = x & pair.a_mask();
                {
                    int j = i - m.rank(x & ~pair.b_mask());
                    Matroid m1_x = restrict_to(splice::isthmus_extension(pair), x);
                    Mask xb_in = m1_x.ground().mask_of(std::span<const std::string>(
                        pair.ground().labels_of(x & pair.b_mask())));
                    Matroid top = contract_to(m1_x, xb_in);
                    Matroid bottom = restrict_to(n, pair.to_right(x));
                    if (bottom.ground() != top.ground()) bottom = reordered(bottom, top.ground());
                    Matroid rhs = splice::free_splice(restrict_to(m, xa),
                                                      higgs::higgs_lift(top, bottom, j));
                    if (reordered(rhs, restrict_to(fs, x).ground()) != restrict_to(fs, x))
                        ok = false;
                }
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
                                                      contract_to(n, pair.to_right(x)));
                    if (reordered(rhs, contract_to(fs, x).ground()) != contract_to(fs, x))
                        ok = false;
                }
            }
            c.expect(ok, "a minor formula failed");
        }
    });
    suite.emplace_back("simple_minor_conditions", [](Checker& c, const Options& opt) {
        for (int t = 0; t < opt.count / 4; ++t) {
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 1, size_cap(opt, 6)));
            auto pair = sampling::random_matched_pair(c.rng, g);
            const Matroid& m = pair.left();
            const Matroid& n = pair.right();
            Matroid fs = splice::free_splice(pair);
            bool ok = true;
            for (Mask x = 0; x <= pair.full() && ok; ++x) {
                Mask xa = x & pair.a_mask();
                Mask xb_r = pair.to_right(x);
                auto sub = splice::matched(restrict_to(m, xa), restrict_to(n, xb_r));
                bool equal_r = sub && reordered(splice::free_splice(*sub),
                                                restrict_to(fs, x).ground()) ==
                                          restrict_to(fs, x);
                bool cond_a = m.rank(pair.left_only()) == m.rank(x & ~pair.b_mask());
                Matroid nx = restrict_to(n, xb_r);
                Mask x_minus_a = nx.ground().mask_of(std::span<const std::string>(
                    pair.ground().labels_of(x & ~pair.a_mask())));
                bool cond_b = is_subset(x_minus_a, nx.isthmuses()) &&
                              orders::modular_pair(m, pair.left_only(), xa);
                if (equal_r != (cond_a || cond_b)) ok = false;
                if (is_subset(pair.left_only(), x) && !equal_r) ok = false;
            }
            c.expect(ok, "restriction condition mismatch");
        }
    });
    suite.emplace_back("intersection_of_free_products", [](Checker& c, const Options& opt) {
        for (int t = 0; t < opt.count / 2; ++t) {
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 1, size_cap(opt, 7)));
            auto pair = sampling::random_matched_pair(c.rng, g);
            auto [first, second] = splice::intersection_factors(pair);
            auto b1 = first.family(FamilyKind::bases);
            auto b2 = second.family(FamilyKind::bases);
            std::vector<Mask> meet;
            std::set_intersection(b1.begin(), b1.end(), b2.begin(), b2.end(),
                                  std::back_inserter(meet));
            c.expect(meet == splice::free_splice(pair).family(FamilyKind::bases),
                     "intersection of free products");
        }
    });
    suite.emplace_back("closure_operator", [](Checker& c, const Options& opt) {
        for (int t = 0; t < opt.count / 2; ++t) {
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 1, size_cap(opt, 6)));
            Matroid l = sampling::random_matroid(c.rng, g);
            auto [a, b] = sampling::random_cover(c.rng, g.full());
            Matroid once = splice::splice_closure(l, a, b);
            c.expect(orders::weak_leq(l, once), "closure not extensive");
            c.expect(splice::splice_closure(once, a, b) == once, "closure not idempotent");
            c.expect((once == l) == factor::is_free_separator(l, a, b),
                     "fixed points are not the separators");
        }
    });
    suite.emplace_back("splice_enumeration", [](Checker& c, const Options& opt) {
        if (opt.n > splice::kDefaultEnumerationCap) {
            // Surface the cap: a single oversized attempt must throw.
            GroundSet g = GroundSet::numbered(opt.n);
            auto pair = sampling::random_matched_pair(c.rng, g);
            try {
                splice::enumerate_splices(pair);
                c.expect(false, "enumeration beyond the cap did not throw");
            } catch (const CapExceeded& e) {
                c.result.skipped = true;
                c.result.note = e.what();
            }
            return;
        }
        int done = 0;
        while (done < std::max(4, opt.count / 10)) {
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 1, size_cap(opt, 5)));
            auto pair = sampling::random_matched_pair(c.rng, g);
            auto fast = splice::enumerate_splices(pair);
            std::vector<Matroid> brute;
            enumeration::for_each_matroid(pair.ground(), [&](const Matroid& l) {
                if (restrict_to(l, pair.a_mask()) != pair.left()) return;
                if (reordered(contract_to(l, pair.b_mask()), pair.right().ground()) !=
                    pair.right())
                    return;
                brute.push_back(l);
            });
            std::sort(brute.begin(), brute.end(), [](const Matroid& x, const Matroid& y) {
                return x.rank_table() < y.rank_table();
            });
            bool ok = fast.size() == brute.size();
            for (size_t i = 0; ok && i < fast.size(); ++i) ok = fast[i] == brute[i];
            c.expect(ok, "enumeration disagrees with brute force");
            ++done;
        }
    });
    suite.emplace_back("gpc_flats_and_restrictions", [](Checker& c, const Options&) {
        Matroid t1 = uniform(GroundSet({"p", "a1", "a2"}), 2);
        Matroid t2 = uniform(GroundSet({"p", "b1", "b2"}), 2);
        Matroid joined = splice::gpc(t1, t2);
        auto [ground, flats] = splice::gpc_flats(t1, t2);
        c.expect(joined.family(FamilyKind::flats) == flats, "gpc flats differ");
        c.expect(restrict_to(joined, 0b00111) == t1, "gpc left restriction");
        Matroid m = uniform(GroundSet({"a", "b", "c"}), 2);
        Matroid n = uniform(GroundSet({"x", "y"}), 1);
        c.expect(splice::gpc(m, n) == direct_sum(m, n), "empty overlap gpc");
    });
    return suite;
}

// ---------------------------------------------------------------- factor --

Suite factor_suite() {
    Suite suite;
    suite.emplace_back("separator_biconditional", [](Checker& c, const Options& opt) {
        for (const auto& l : sampling::corpus(c.rng, size_cap(opt, 6), opt.count / 4)) {
            bool ok = true;
            Mask full = l.full();
            for (Mask a = 0; ; ++a) {
                for_each_subset(a, [&](Mask extra) {
                    Mask b = (full & ~a) | extra;
                    if (factor::is_free_separator(l, a, b) !=
                        (splice::splice_closure(l, a, b) == l))
                        ok = false;
                });
                if (a == full) break;
            }
            c.expect(ok, "separator test disagrees with re-splicing");
        }
    });
    suite.emplace_back("irreducibility_equivalence", [](Checker& c, const Options& opt) {
        for (const auto& l : sampling::corpus(c.rng, size_cap(opt, 6), opt.count / 2)) {
            bool nontrivial = false;
            for (const auto& s : factor::free_separators(l))
                if (s.nontrivial) nontrivial = true;
            c.expect(factor::is_irreducible(l) == !nontrivial,
                     "pair-separation test disagrees with the separator scan");
        }
    });
    suite.emplace_back("clones_force_reducibility", [](Checker& c, const Options& opt) {
        for (const auto& l : sampling::corpus(c.rng, size_cap(opt, 7), opt.count / 2)) {
            if (l.size() < 2) continue;
            bool has_clones = false;
            for (Mask cls : factor::clone_classes(l))
                if (popcount(cls) > 1) has_clones = true;
            if (has_clones)
                c.expect(!factor::is_irreducible(l), "a matroid with clones is irreducible");
            if (l.loops() != 0 || l.isthmuses() != 0)
                c.expect(!factor::is_irreducible(l), "loop or isthmus but irreducible");
        }
    });
    suite.emplace_back("two_sided_separators_are_clone_cuts", [](Checker& c, const Options& opt) {
        for (const auto& l : sampling::corpus(c.rng, size_cap(opt, 5), opt.count / 4)) {
            if (l.size() < 2) continue;
            auto classes = factor::clone_classes(l);
            Mask full = l.full();
            bool ok = true;
            for (Mask a = 0; ; ++a) {
                if (a != full)
                    for_each_subset(a, [&](Mask extra) {
                        Mask b = (full & ~a) | extra;
                        if (b == full) return;
                        bool both = factor::is_free_separator(l, a, b) &&
                                    factor::is_free_separator(l, b, a);
                        Mask symm = (a & ~b) | (b & ~a);
                        bool clones = popcount(symm) <= 1;
                        for (Mask cls : classes)
                            if (is_subset(symm, cls)) clones = true;
                        if (both != clones) ok = false;
                    });
                if (a == full) break;
            }
            c.expect(ok, "two-sided separator test");
        }
    });
    suite.emplace_back("separators_restrict_to_factors", [](Checker& c, const Options& opt) {
        for (int t = 0; t < opt.count / 2; ++t) {
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 2, size_cap(opt, 7)));
            auto pair = sampling::random_matched_pair(c.rng, g);
            Matroid l = splice::free_splice(pair);
            Mask a2 = static_cast<Mask>(c.rng()) & pair.a_mask();
            Mask b2 = static_cast<Mask>(c.rng()) & pair.b_mask();
            if ((a2 | b2) != pair.full()) continue;
            bool lhs = factor::is_free_separator(l, a2, b2);
            bool rhs =
                factor::is_free_separator(pair.left(), a2, pair.a_mask() & b2) &&
                factor::is_free_separator(pair.right(), pair.to_right(a2 & pair.b_mask()),
                                          pair.to_right(b2));
            c.expect(lhs == rhs, "separator restriction biconditional");
        }
    });
    suite.emplace_back("direct_sum_irreducibility", [](Checker& c, const Options& opt) {
        for (int t = 0; t < opt.count / 2; ++t) {
            GroundSet ga = GroundSet::numbered(sampling::pick(c.rng, 2, 4), "a");
            GroundSet gb = GroundSet::numbered(sampling::pick(c.rng, 2, 4), "b");
            Matroid m = sampling::random_matroid(c.rng, ga);
            Matroid n = sampling::random_matroid(c.rng, gb);
            c.expect(factor::is_irreducible(direct_sum(m, n)) ==
                         (factor::is_irreducible(m) && factor::is_irreducible(n)),
                     "direct-sum irreducibility");
        }
    });
    suite.emplace_back("separator_duality", [](Checker& c, const Options& opt) {
        for (const auto& l : sampling::corpus(c.rng, size_cap(opt, 6), opt.count / 4)) {
            Matroid ld = dual(l);
            Mask full = l.full();
            bool ok = true;
            for (Mask a = 0; ; ++a) {
                for_each_subset(a, [&](Mask extra) {
                    Mask b = (full & ~a) | extra;
                    if (factor::is_free_separator(l, a, b) !=
                        factor::is_free_separator(ld, b, a))
                        ok = false;
                });
                if (a == full) break;
            }
            c.expect(ok, "separator duality");
        }
    });
    suite.emplace_back("decomposition_closed_under_duality", [](Checker& c, const Options& opt) {
        for (const auto& l : sampling::corpus(c.rng, size_cap(opt, 7), opt.count / 2)) {
            if (l.size() == 0) continue;
            c.expect(factor::splice_decomposition(l).has_value() ==
                         factor::splice_decomposition(dual(l)).has_value(),
                     "decomposability not dual-closed");
        }
    });
    suite.emplace_back("factor_trees_rebuild", [](Checker& c, const Options& opt) {
        auto rebuild = [](auto&& self, const factor::FactorTree::Node& node) -> Matroid {
            if (node.leaf)
                return uniform(GroundSet({node.leaf_label}), node.leaf_is_loop ? 0 : 1);
            return reordered(splice::free_splice(self(self, *node.left),
                                                 self(self, *node.right)),
                             GroundSet(node.ground));
        };
        for (const auto& l : sampling::corpus(c.rng, size_cap(opt, 7), opt.count / 2)) {
            if (l.size() == 0) continue;
            auto tree = factor::splice_decomposition(l);
            if (!tree) continue;
            c.expect(rebuild(rebuild, *tree->root) == l, "factor tree does not resplice");
        }
    });
    suite.emplace_back("named_class_memberships", [](Checker& c, const Options&) {
        c.expect(factor::is_irreducible(constructions::complete_graph(4)), "M(K4) irreducible");
        c.expect(!factor::is_irreducible(constructions::vamos()), "V8 reducible");
        c.expect(factor::splice_decomposition(constructions::vamos()).has_value(),
                 "V8 decomposes");
        Matroid b5 = constructions::simplex_bicircular_edges(5);
        c.expect(factor::is_irreducible(b5), "edge bicircular matroid irreducible");
        c.expect(!factor::splice_decomposition(b5).has_value(),
                 "edge bicircular matroid does not decompose");
    });
    return suite;
}

// --------------------------------------------------------------- algebra --

Suite algebra_suite() {
    Suite suite;
    auto patterns = [] {
        return std::vector<std::array<GroundSet, 3>>{
            {GroundSet({"x", "u"}), GroundSet({"u", "v"}), GroundSet({"v", "x"})},
            {GroundSet({"x"}), GroundSet({"u", "v"}), GroundSet({"x"})},
            {GroundSet({"x", "y"}), GroundSet({"u", "v"}), GroundSet({"x", "u"})},
            {GroundSet({"x", "t", "u"}), GroundSet({"t", "u", "v"}), GroundSet({"x", "t", "v"})},
        };
    };
    suite.emplace_back("reassociation_identities", [patterns](Checker& c, const Options& opt) {
        auto pats = patterns();
        for (int t = 0; t < opt.count; ++t) {
            auto& pat = pats[c.rng() % pats.size()];
            auto triple = sampling::random_triple_seed(c.rng, pat[0], pat[1], pat[2]);
            auto [lhs, rhs] = algebra::reassociate_left(triple.m, triple.n, triple.p);
            c.expect(lhs == rhs, "left reassociation identity");
            auto [lhs2, rhs2] =
                algebra::reassociate_right(dual(triple.p), dual(triple.n), dual(triple.m));
            c.expect(lhs2 == rhs2, "right reassociation identity");
        }
    });
    suite.emplace_back("associativity_characterization", [patterns](Checker& c,
                                                                    const Options& opt) {
        auto pats = patterns();
        int done = 0, attempts = 0, broken = 0;
        while (done < opt.count && attempts < opt.count * 100) {
            ++attempts;
            auto& pat = pats[c.rng() % pats.size()];
            auto triple = sampling::random_triple_seed(c.rng, pat[0], pat[1], pat[2]);
            auto np = splice::matched(triple.n, triple.p);
            if (!np) continue;
            if (!splice::matched(triple.m, splice::free_splice(*np))) continue;
            ++done;
            auto report = algebra::associativity_report(triple.m, triple.n, triple.p);
            c.expect(report.predicted == report.actual, "characterization mismatch");
            if (!report.actual) ++broken;
        }
        c.expect(broken > 0, "no non-associative instance found");
    });
    suite.emplace_back("absorption", [](Checker& c, const Options& opt) {
        GroundSet a({"x", "u"}), b({"u"}), cc({"u", "v"});
        for (int t = 0; t < opt.count / 2; ++t) {
            auto triple = sampling::random_triple_seed(c.rng, a, b, cc);
            Matroid left =
                splice::free_splice(splice::free_splice(triple.m, triple.n), triple.p);
            auto direct = splice::matched(triple.m, triple.p);
            if (!direct) { c.expect(false, "absorption pair unmatched"); continue; }
            c.expect(reordered(splice::free_splice(*direct), left.ground()) == left,
                     "absorption identity");
        }
    });
    suite.emplace_back("commutativity_characterization", [](Checker& c, const Options& opt) {
        int done = 0, attempts = 0;
        while (done < opt.count && attempts < opt.count * 60) {
            ++attempts;
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 1, size_cap(opt, 6)));
            auto pair = sampling::random_matched_pair(c.rng, g);
            if (!splice::matched(pair.right(), pair.left())) continue;
            ++done;
            auto report = algebra::commutativity_report(pair.left(), pair.right());
            c.expect(report.predicted == report.actual, "commutativity prediction");
        }
    });
    suite.emplace_back("commuting_separator_criterion", [](Checker& c, const Options& opt) {
        for (const auto& l : sampling::corpus(c.rng, size_cap(opt, 5), opt.count / 4)) {
            Mask full = l.full();
            bool ok = true;
            for (Mask b = 0; ; ++b) {
                Mask s = full & ~b;
                (void)s;
                for_each_subset(b, [&](Mask ea) {
                    for_each_subset(b, [&](Mask ec) {
                        Mask a = (full & ~b) | ea, cc = (full & ~b) | ec;
                        if (algebra::commuting_separator_criterion(l, a, b, cc) !=
                            algebra::commuting_separator_direct(l, a, b, cc))
                            ok = false;
                    });
                });
                if (b == full) break;
            }
            c.expect(ok, "structural criterion disagrees with the direct check");
        }
    });
    suite.emplace_back("separator_transfer", [](Checker& c, const Options& opt) {
        int done = 0, attempts = 0;
        while (done < opt.count / 2 && attempts < opt.count * 60) {
            ++attempts;
            GroundSet g = GroundSet::numbered(sampling::pick(c.rng, 2, size_cap(opt, 7)));
            Matroid l = sampling::random_matroid(c.rng, g);
            Mask full = g.full();
            Mask ab = static_cast<Mask>(c.rng()) & full;
            Mask cc = (full & ~ab) | (static_cast<Mask>(c.rng()) & full);
            if (!factor::is_free_separator(l, ab, cc)) continue;
            Matroid l_ab = restrict_to(l, ab);
            Mask a = static_cast<Mask>(c.rng()) & ab;
            Mask b = (ab & ~a) | (static_cast<Mask>(c.rng()) & ab);
            if (!factor::is_free_separator(l_ab, compress_bits(a, ab), compress_bits(b, ab)))
                continue;
            ++done;
            c.expect(factor::is_free_separator(l, a, b | cc), "transfer to the joint separator");
        }
    });
    suite.emplace_back("commuting_reconstructions", [](Checker& c, const Options& opt) {
        GroundSet gs({"s1", "s2"}), gw({"w1"}), gab({"t1", "t2"});
        for (int t = 0; t < opt.count / 2; ++t) {
            Matroid q = sampling::random_matroid(c.rng, gab);
            Matroid m = direct_sum(free_matroid(gs), q);
            Matroid n = direct_sum(q, free_matroid(gw));
            Matroid p = direct_sum(direct_sum(free_matroid(gs), contract_to(q, 0b01)),
                                   free_matroid(gw));
            Matroid left = splice::free_splice(m, n);
            Matroid right = splice::free_splice(n, p);
            c.expect(reordered(right, left.ground()) == left, "isthmus-case reconstruction");
        }
    });
    return suite;
}

// ---------------------------------------------------------- constructions --

Suite constructions_suite() {
    Suite suite;
    suite.emplace_back("named_matroids", [](Checker& c, const Options&) {
        Matroid k4 = constructions::complete_graph(4);
        c.expect(k4.rank() == 3 && k4.size() == 6, "M(K4) shape");
        int k4_lines = 0;
        for (Mask z : k4.family(FamilyKind::cyclic_flats))
            if (k4.rank(z) == 2) ++k4_lines;
        c.expect(k4_lines == 4, "M(K4) cyclic lines");
        Matroid fano = constructions::projective_geometry(3, 2);
        c.expect(fano.size() == 7 && fano.rank() == 3, "projective plane shape");
        c.expect(is_isomorphic(constructions::wheel(3), k4).has_value(), "wheel(3) vs M(K4)");
        Matroid w3 = constructions::whirl(3);
        c.expect(w3.family(FamilyKind::cyclic_flats).size() == 5, "whirl cyclic flats");
        Matroid v8 = constructions::vamos();
        c.expect(v8.family(FamilyKind::cyclic_flats).size() == 7, "vamos cyclic flats");
    });
    suite.emplace_back("transversal_presentations", [](Checker& c, const Options&) {
        GroundSet g = GroundSet::numbered(5);
        constructions::SetSystem copies{g, {g.full(), g.full(), g.full()}};
        c.expect(constructions::transversal(copies) == uniform(g, 3), "uniform from copies");
        Matroid b5 = constructions::simplex_bicircular_edges(5);
        c.expect(b5.rank() == 5 && b5.size() == 10, "edge bicircular shape");
    });
    suite.emplace_back("column_matroids", [](Checker& c, const Options& opt) {
        for (int t = 0; t < opt.count / 2; ++t) {
            int n = sampling::pick(c.rng, 1, size_cap(opt, 7));
            gf::GFMatrix mat;
            mat.p = t % 2 == 0 ? 2 : 3;
            mat.rows = sampling::pick(c.rng, 1, 4);
            mat.cols = n;
            for (int i = 0; i < n; ++i) mat.col_labels.push_back("e" + std::to_string(i));
            mat.entries.resize(static_cast<size_t>(mat.rows) * n);
            for (auto& e : mat.entries)
                e = static_cast<std::uint8_t>(c.rng() % static_cast<unsigned>(mat.p));
            Matroid l = gf::column_matroid(mat);
            Mask keep = static_cast<Mask>(c.rng()) & l.full();
            c.expect(gf::column_matroid(gf::restrict_columns(mat, keep)) ==
                         restrict_to(l, keep),
                     "restriction representation");
            c.expect(gf::column_matroid(gf::contract_columns(mat, keep)) ==
                         contracted(l, keep),
                     "contraction representation");
        }
    });
    suite.emplace_back("splice_representations", [](Checker& c, const Options& opt) {
        int done = 0;
        while (done < opt.count / 2) {
            int n = sampling::pick(c.rng, 2, size_cap(opt, 7));
            gf::GFMatrix mat;
            mat.p = done % 2 == 0 ? 2 : 3;
            mat.rows = sampling::pick(c.rng, 1, 4);
            mat.cols = n;
            for (int i = 0; i < n; ++i) mat.col_labels.push_back("e" + std::to_string(i));
            mat.entries.resize(static_cast<size_t>(mat.rows) * n);
            for (auto& e : mat.entries)
                e = static_cast<std::uint8_t>(c.rng() % static_cast<unsigned>(mat.p));
            Matroid l = gf::column_matroid(mat);
            auto [a, b] = sampling::random_cover(c.rng, l.full());
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
            c.expect(restrict_to(joined, a_in) == m, "splice representation left factor");
            c.expect(reordered(contract_to(joined, b_in), n_side.ground()) == n_side,
                     "splice representation right factor");
            ++done;
        }
    });
    suite.emplace_back("base_orderability", [](Checker& c, const Options&) {
        c.expect(constructions::is_base_orderable(uniform(GroundSet::numbered(6), 3)),
                 "uniform base-orderable");
        c.expect(!constructions::is_base_orderable(constructions::complete_graph(4)),
                 "M(K4) not base-orderable");
    });
    suite.emplace_back("uniform_line_minors", [](Checker& c, const Options&) {
        Matroid fano = constructions::projective_geometry(3, 2);
        c.expect(constructions::has_uniform_line_minor(fano, 3), "fano has 3-point lines");
        c.expect(!constructions::has_uniform_line_minor(fano, 4), "fano is binary");
        c.expect(constructions::has_uniform_line_minor(constructions::whirl(3), 4),
                 "whirl has a 4-point line");
    });
    suite.emplace_back("factorization_report_selfcheck", [](Checker& c, const Options&) {
        Matroid u24 = uniform(GroundSet::numbered(4), 2);
        auto report = constructions::higgs_factorization_report(u24);
        c.expect(!report.factorizations.empty(), "no factorizations found");
        for (const auto& item : report.factorizations)
            c.expect(higgs::higgs_lift(item.lift, item.quotient, item.step) == u24,
                     "reported factorization does not reproduce the matroid");
    });
    return suite;
}

Suite suite_by_name(const std::string& name) {
    if (name == "axioms") return axioms_suite();
    if (name == "higgs") return higgs_suite();
    if (name == "splice") return splice_suite();
    if (name == "factor") return factor_suite();
    if (name == "algebra") return algebra_suite();
    if (name == "constructions") return constructions_suite();
    throw Error("unknown suite: " + name);
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"axioms", "higgs", "splice", "factor", "algebra", "constructions", "all"};
}

SuiteReport run_suite(const std::string& name, const Options& options) {
    SuiteReport report;
    report.suite = name;
    std::vector<std::string> names;
    if (name == "all")
        names = {"axioms", "higgs", "splice", "factor", "algebra", "constructions"};
    else
        names = {name};

    for (const auto& suite_name : names) {
        for (auto& [prop_name, fn] : suite_by_name(suite_name)) {
            Checker checker(suite_name + "." + prop_name, options);
            try {
                fn(checker, options);
            } catch (const CapExceeded& e) {
                checker.result.skipped = true;
                checker.result.note = e.what();
            } catch (const Error& e) {
                checker.result.failures += 1;
                checker.result.note = e.what();
            }
            if (checker.result.failures > 0) report.passed = false;
            checker.result.name = suite_name + "." + prop_name;
            report.properties.push_back(std::move(checker.result));
        }
    }
    return report;
}

}  // namespace matspl::verify
