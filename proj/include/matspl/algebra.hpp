#pragma once

#include <optional>
#include <utility>

#include "matspl/matroid.hpp"
#include "matspl/splice.hpp"

namespace matspl::algebra {

// Canonical joint ground set for a triple: A's labels, then B-A, then C-(A|B).
GroundSet triple_ground(const Matroid& m, const Matroid& n, const Matroid& p);

// Left identity: (M join N) join P = M join (N' join P) with N' = M.U join N,
// U = A & (B|C).  Returns both sides on the joint ground.
std::pair<Matroid, Matroid> reassociate_left(const Matroid& m, const Matroid& n, const Matroid& p);

// Right identity: M join (N join P) = (M join N'') join P with N'' = N join P|V,
// V = (A|B) & C.
std::pair<Matroid, Matroid> reassociate_right(const Matroid& m, const Matroid& n, const Matroid& p);

// Associativity verdict for a triple satisfying all four matching hypotheses.
struct TripleReport {
    bool pair_mn = false;        // (M, N) matched
    bool pair_mn_p = false;      // (M join N, P) matched
    bool pair_np = false;        // (N, P) matched
    bool pair_m_np = false;      // (M, N join P) matched
    bool overlap_empty = false;  // (A & C) - B is empty
    bool cond_isthmus = false;   // (A&C)-B isthmuses of M, B-A isthmuses of N
    bool cond_loop = false;      // (A&C)-B loops of P, B-C loops of N
    bool cond_modular = false;   // B inside A|C, loop/isthmus split, modular pair in P
    bool predicted = false;      // any of the above
    bool actual = false;         // the two products are equal
    Matroid left_product;        // (M join N) join P
    Matroid right_product;       // M join (N join P)
    Matroid mid_left;            // N' of the left identity
    Matroid mid_right;           // N'' of the right identity
};

TripleReport associativity_report(const Matroid& m, const Matroid& n, const Matroid& p);

struct CommuteReport {
    bool cond_loops = false;      // A-B loops of M and B-A loops of N
    bool cond_isthmuses = false;  // A-B isthmuses of M and B-A isthmuses of N
    bool cond_b_in_a = false;     // B inside A and M splits as M|B + M|(A-B)
    bool cond_a_in_b = false;     // A inside B and N splits as N|A + N|(B-A)
    bool predicted = false;
    bool actual = false;
};

CommuteReport commutativity_report(const Matroid& m, const Matroid& n);

// Structural criterion for (A,B) and (B,C) both free separators with
// L|B = L.B; must match the direct evaluation.
bool commuting_separator_criterion(const Matroid& l, Mask a, Mask b, Mask c);
bool commuting_separator_direct(const Matroid& l, Mask a, Mask b, Mask c);

}  // namespace matspl::algebra
