#pragma once

#include <random>
#include <utility>
#include <vector>

#include "matspl/matroid.hpp"
#include "matspl/splice.hpp"

namespace matspl::sampling {

using Rng = std::mt19937_64;

int pick(Rng& rng, int lo, int hi);  // inclusive

// A mixed random matroid on exactly the given ground set: uniform, nested,
// GF(2)/GF(3) column, transversal, graphic, plus duals and truncations.
Matroid random_matroid(Rng& rng, const GroundSet& ground);

// A random strong-order pair: both matroids on `ground`, second a quotient of
// the first (restriction and contraction of one larger matroid).
std::pair<Matroid, Matroid> random_quotient_pair(Rng& rng, const GroundSet& ground);

// Random matched pair on a random covering split of the ground set.
splice::MatchedPair random_matched_pair(Rng& rng, const GroundSet& ground);

// Random covering pair (a, b) of the full mask.
std::pair<Mask, Mask> random_cover(Rng& rng, Mask full);

struct Triple {
    Matroid m, n, p;
};

// Triple with (M, N) and (M join N, P) matched by construction; the two
// remaining hypotheses of the associativity characterization hold for a
// positive fraction and are rejection-filtered by the callers.
Triple random_triple_seed(Rng& rng, const GroundSet& a, const GroundSet& b, const GroundSet& c);

// Named small matroids plus seeded randoms, capped at max_size elements.
std::vector<Matroid> corpus(Rng& rng, int max_size, int random_count);

}  // namespace matspl::sampling
