#pragma once

#include <vector>

#include "matspl/matroid.hpp"

namespace matspl::orders {

// Weak order: every independent set of n is independent in m (equivalently
// the rank of n never exceeds the rank of m pointwise).
bool weak_leq(const Matroid& n, const Matroid& m);

// Strong order: every flat of n is a flat of m.
bool is_quotient(const Matroid& n, const Matroid& m);

bool modular_pair(const Matroid& m, Mask x, Mask y);
bool modular_flat(const Matroid& m, Mask f);

// An up-closed family of flats closed under intersections of modular pairs;
// the kernel of a single-element extension.
struct ModularCut {
    std::vector<Mask> members;  // sorted
};

// All modular cuts of m that give a non-loop extension (bottom flat excluded,
// cut nonempty).  Deterministic order.
std::vector<ModularCut> modular_cuts(const Matroid& m);

// All n with is_quotient(n, m) and rank(n) = rank(m) - 1, deduplicated,
// ordered by rank table.
std::vector<Matroid> elementary_quotients(const Matroid& m);

// All proper quotients of m at every rank, by iterating elementary quotients.
std::vector<Matroid> proper_quotients(const Matroid& m);

}  // namespace matspl::orders
