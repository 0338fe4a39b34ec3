#include "matspl/algebra.hpp"

#include "matspl/factor.hpp"
#include "matspl/orders.hpp"

namespace matspl::algebra {

namespace {

Mask label_mask(const Matroid& host, const GroundSet& labels_of) {
    Mask out = 0;
    for (const auto& l : labels_of.labels())
        if (auto idx = host.ground().index_of(l)) out |= Mask{1} << *idx;
    return out;
}

}  // namespace

GroundSet triple_ground(const Matroid& m, const Matroid& n, const Matroid& p) {
    std::vector<std::string> labels = m.ground().labels();
    auto add = [&](const GroundSet& g) {
        for (const auto& l : g.labels())
            if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
    };
    add(n.ground());
    add(p.ground());
    return GroundSet(std::move(labels));
}

std::pair<Matroid, Matroid> reassociate_left(const Matroid& m, const Matroid& n,
                                             const Matroid& p) {
    GroundSet joint = triple_ground(m, n, p);
    Matroid mn = splice::free_splice(m, n);
    Matroid left = splice::free_splice(mn, p);

    // U = A & (B|C) in M's coordinates.
    Mask u = label_mask(m, n.ground()) | label_mask(m, p.ground());
    Matroid n_prime = splice::free_splice(contract_to(m, u), n);
    Matroid right = splice::free_splice(m, splice::free_splice(n_prime, p));
    return {reordered(left, joint), reordered(right, joint)};
}

std::pair<Matroid, Matroid> reassociate_right(const Matroid& m, const Matroid& n,
                                              const Matroid& p) {
    GroundSet joint = triple_ground(m, n, p);
    Matroid np = splice::free_splice(n, p);
    Matroid left = splice::free_splice(m, np);

    // V = (A|B) & C in P's coordinates.
    Mask v = label_mask(p, m.ground()) | label_mask(p, n.ground());
    Matroid n_dprime = splice::free_splice(n, restrict_to(p, v));
    Matroid right = splice::free_splice(splice::free_splice(m, n_dprime), p);
    return {reordered(left, joint), reordered(right, joint)};
}

TripleReport associativity_report(const Matroid& m, const Matroid& n, const Matroid& p) {
    GroundSet joint = triple_ground(m, n, p);

    auto mn_pair = splice::matched(m, n);
    if (!mn_pair) throw NotMatched("(M, N)");
    Matroid mn = splice::free_splice(*mn_pair);
    auto mn_p = splice::matched(mn, p);
    if (!mn_p) throw NotMatched("(M join N, P)");
    auto np_pair = splice::matched(n, p);
    if (!np_pair) throw NotMatched("(N, P)");
    Matroid np = splice::free_splice(*np_pair);
    auto m_np = splice::matched(m, np);
    if (!m_np) throw NotMatched("(M, N join P)");

    TripleReport report;
    report.pair_mn = report.pair_mn_p = report.pair_np = report.pair_m_np = true;
    report.left_product = reordered(splice::free_splice(*mn_p), joint);
    report.right_product = reordered(splice::free_splice(*m_np), joint);
    report.actual = report.left_product == report.right_product;

    Mask u = label_mask(m, n.ground()) | label_mask(m, p.ground());
    report.mid_left = splice::free_splice(contract_to(m, u), n);
    Mask v = label_mask(p, m.ground()) | label_mask(p, n.ground());
    report.mid_right = splice::free_splice(n, restrict_to(p, v));

    // All sets below in the joint coordinates.
    Mask a = label_mask(report.left_product, m.ground());
    Mask b = label_mask(report.left_product, n.ground());
    Mask c = label_mask(report.left_product, p.ground());
    Mask ac_minus_b = (a & c) & ~b;

    auto in_joint = [&](const Matroid& q, Mask elements_of_q) {
        Mask out = 0;
        for (int e = 0; e < q.size(); ++e)
            if (elements_of_q & (Mask{1} << e)) {
                auto idx = report.left_product.ground().index_of(q.ground().label(e));
                out |= Mask{1} << *idx;
            }
        return out;
    };

    Mask isthm_m = in_joint(m, m.isthmuses());
    Mask loops_p = in_joint(p, p.loops());
    Mask isthm_n = in_joint(n, n.isthmuses());
    Mask loops_n = in_joint(n, n.loops());

    report.overlap_empty = ac_minus_b == 0;
    report.cond_isthmus = is_subset(ac_minus_b, isthm_m) && is_subset(b & ~a, isthm_n);
    report.cond_loop = is_subset(ac_minus_b, loops_p) && is_subset(b & ~c, loops_n);
    {
        Mask s = ac_minus_b;
        Mask t = a & b & c;
        Mask s_in_p = 0, t_in_p = 0;
        for (int e = 0; e < p.size(); ++e) {
            auto idx = report.left_product.ground().index_of(p.ground().label(e));
            if (s & (Mask{1} << *idx)) s_in_p |= Mask{1} << e;
            if (t & (Mask{1} << *idx)) t_in_p |= Mask{1} << e;
        }
        report.cond_modular = is_subset(b, a | c) && is_subset(b & ~a, isthm_n) &&
                              is_subset(b & ~c, loops_n) &&
                              orders::modular_pair(p, s_in_p, t_in_p);
    }
    report.predicted = report.overlap_empty || report.cond_isthmus || report.cond_loop ||
                       report.cond_modular;
    return report;
}

CommuteReport commutativity_report(const Matroid& m, const Matroid& n) {
    auto mn = splice::matched(m, n);
    if (!mn) throw NotMatched("(M, N)");
    auto nm = splice::matched(n, m);
    if (!nm) throw NotMatched("(N, M)");

    CommuteReport report;
    Mask a_only_m = mn->left_only();                  // A-B in M coords (A prefix)
    Mask b_only_n = mn->to_right(mn->right_only());   // B-A in N coords

    report.cond_loops = is_subset(a_only_m, m.loops()) && is_subset(b_only_n, n.loops());
    report.cond_isthmuses =
        is_subset(a_only_m, m.isthmuses()) && is_subset(b_only_n, n.isthmuses());
    // Containment plus a direct-sum split across the overlap.
    if (mn->right_only() == 0) {
        Mask overlap_in_m = mn->overlap();
        report.cond_b_in_a =
            m.rank(overlap_in_m) + m.rank(a_only_m) == m.rank();
    }
    if (mn->left_only() == 0) {
        Mask overlap_in_n = mn->to_right(mn->overlap());
        report.cond_a_in_b =
            n.rank(overlap_in_n) + n.rank(b_only_n) == n.rank();
    }
    report.predicted = report.cond_loops || report.cond_isthmuses || report.cond_b_in_a ||
                       report.cond_a_in_b;

    Matroid mn_prod = splice::free_splice(*mn);
    Matroid nm_prod = reordered(splice::free_splice(*nm), mn_prod.ground());
    report.actual = mn_prod == nm_prod;
    return report;
}

bool commuting_separator_criterion(const Matroid& l, Mask a, Mask b, Mask c) {
    const Mask full = l.full();
    if ((a | b) != full || (b | c) != full) throw CoverageGap();
    Mask s = full & ~b;  // equals both A-B and C-B
    if (s == 0) return true;
    Mask isthm = l.isthmuses(), loops = l.loops();
    if (is_subset(s | (b & ~a), isthm)) return true;
    if (is_subset(s | (b & ~c), loops)) return true;
    return is_subset(b, a | c) && is_subset(b & ~a, isthm) && is_subset(b & ~c, loops) &&
           orders::modular_pair(l, s, a & b & c);
}

bool commuting_separator_direct(const Matroid& l, Mask a, Mask b, Mask c) {
    if (!factor::is_free_separator(l, a, b)) return false;
    if (!factor::is_free_separator(l, b, c)) return false;
    return restrict_to(l, b) == contract_to(l, b);
}

}  // namespace matspl::algebra
