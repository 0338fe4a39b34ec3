#pragma once

#include <string>
#include <utility>
#include <vector>

#include "matspl/gf.hpp"
#include "matspl/matroid.hpp"

namespace matspl::constructions {

// Cycle matroid of a multigraph given as vertex-label pairs; element labels
// default to "u-v" (deduplicated with a counter).
Matroid graphic(const std::vector<std::pair<std::string, std::string>>& edges,
                std::vector<std::string> element_labels = {});

Matroid complete_graph(int vertices);  // M(K_n)

// Column matroid of the projective geometry PG(rank-1, p); points are labeled
// by their normalized coordinate strings.
Matroid projective_geometry(int rank, int p);

// A transversal presentation: a ground set plus a list of subsets.
struct SetSystem {
    GroundSet ground;
    std::vector<Mask> sets;
};

// Rank of X = maximum matching between X and the presentation sets.
Matroid transversal(const SetSystem& system);

// Simplex bicircular matroids: one element per vertex plus one freely on
// each edge of the n-vertex simplex; edge_part keeps only the edge elements.
Matroid simplex_bicircular(int n);             // B_n
Matroid simplex_bicircular_edges(int n);       // B'_n

Matroid wheel(int spokes);
Matroid whirl(int spokes);  // spokes = 3 uses the fixed labeling on {c,c',d,e,f,g}
Matroid vamos();

bool is_base_orderable(const Matroid& l);

// Some contraction of l has rank 2 and at least `points` parallel classes of
// non-loops (hence a U_{2,points} minor).
bool has_uniform_line_minor(const Matroid& l, int points);

// One way of writing g as a Higgs lift of a proper quotient toward a proper lift.
struct HiggsFactorization {
    Matroid quotient;  // G1
    Matroid lift;      // G2
    int step = 0;      // j with g = lift_j(G2, G1)
    bool principal = false;
    std::string element;  // the common element when principal
};

struct FactorizationReport {
    bool hypothesis_holds = false;  // every factorization is principal with step 1
    std::vector<HiggsFactorization> factorizations;
};

// Enumerates all proper quotients and proper lifts of g and every Higgs step
// between them that reproduces g; checks each against the principal
// truncation/lift pattern at a common element.
FactorizationReport higgs_factorization_report(const Matroid& g);

}  // namespace matspl::constructions
