#pragma once

#include <functional>
#include <vector>

#include "matspl/matroid.hpp"

namespace matspl::enumeration {

// Visits every matroid on the ground set exactly once (search over rank
// tables with unit-increase and local-submodularity pruning).  Intended as a
// brute-force oracle at small sizes.
void for_each_matroid(const GroundSet& ground, const std::function<void(const Matroid&)>& visit);

std::vector<Matroid> all_matroids(const GroundSet& ground);

}  // namespace matspl::enumeration
