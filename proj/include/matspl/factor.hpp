#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matspl/matroid.hpp"

namespace matspl::factor {

// An ordered cover (A, B) of the ground set with L = L|A join L.B.
struct FreeSeparator {
    Mask a = 0, b = 0;
    bool nontrivial = false;  // both A-B and B-A nonempty
    bool minimal = false;     // minimal in the product order on (A, B)
};

// Cyclic-flat containment test: every cyclic flat lies inside A or contains A-B.
bool is_free_separator(const Matroid& l, Mask a, Mask b);

std::vector<FreeSeparator> free_separators(const Matroid& l);
std::vector<FreeSeparator> minimal_free_separators(const Matroid& l);

// No nontrivial free separator; equivalently every ordered pair of distinct
// elements is separated by a cyclic flat.
bool is_irreducible(const Matroid& l);

// Partition of the elements by cyclic-flat membership signature, ordered by
// least element.
std::vector<Mask> clone_classes(const Matroid& l);

// Cyclic flats form a chain under inclusion.
bool is_nested(const Matroid& l);

// Decomposition of a matroid into iterated free splices of single elements.
struct FactorTree {
    struct Node {
        bool leaf = false;
        std::string leaf_label;
        bool leaf_is_loop = false;
        std::vector<std::string> ground;     // labels of this subtree's matroid
        std::vector<std::string> a, b;       // separator labels (internal nodes)
        std::unique_ptr<Node> left, right;   // factors L|A and L.B
    };
    std::unique_ptr<Node> root;
};

// A tree exists exactly when the matroid can be built from single loops and
// isthmuses by free splices; the recursion over nontrivial separators is a
// decision procedure since both factors are strictly smaller.
std::optional<FactorTree> splice_decomposition(const Matroid& l);

std::string factor_tree_to_dot(const FactorTree& tree);

// Set-level helpers that avoid rank tables, for oversized ground sets:
// cyclic flats are the flats F with no F-e in the family.
std::vector<Mask> cyclic_flats_of_flat_family(const std::vector<Mask>& flats);
bool irreducible_from_cyclic_flats(int n, const std::vector<Mask>& cyclic_flats);

}  // namespace matspl::factor
