#pragma once

#include <json.hpp>

#include "matspl/algebra.hpp"
#include "matspl/factor.hpp"
#include "matspl/gf.hpp"
#include "matspl/matroid.hpp"

namespace matspl::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "matspl/1";

// Canonical matroid document: explicit ground plus a rank-table definition;
// with_summary adds rank, loops, isthmuses and the cyclic flats.
Json matroid_to_json(const Matroid& m, bool with_summary = false);

// Accepts defs of type rank_table, bases, cyclic_flats, uniform, graphic,
// transversal, gf_matrix, projective, wheel, whirl, vamos.
Matroid matroid_from_json(const Json& doc);

Json family_to_json(const SubsetFamily& family);

Json gf_matrix_to_json(const gf::GFMatrix& mat);
gf::GFMatrix gf_matrix_from_json(const Json& doc);

Json factor_tree_to_json(const factor::FactorTree& tree);

Json separator_to_json(const GroundSet& ground, const factor::FreeSeparator& sep);

Json triple_report_to_json(const algebra::TripleReport& report);

}  // namespace matspl::io
