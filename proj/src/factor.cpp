#include "matspl/factor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace matspl::factor {

bool is_free_separator(const Matroid& l, Mask a, Mask b) {
    if ((a | b) != l.full()) throw CoverageGap();
    Mask s = a & ~b;
    for (Mask z : l.family(FamilyKind::cyclic_flats))
        if (!is_subset(z, a) && !is_subset(s, z)) return false;
    return true;
}

std::vector<FreeSeparator> free_separators(const Matroid& l) {
    const Mask full = l.full();
    std::vector<FreeSeparator> out;
    std::set<std::pair<Mask, Mask>> found;
    for (Mask a = 0; ; ++a) {
        Mask rest = full & ~a;
        for_each_subset(a, [&](Mask extra) {
            Mask b = rest | extra;
            if (is_free_separator(l, a, b)) {
                FreeSeparator sep;
                sep.a = a;
                sep.b = b;
                sep.nontrivial = (a & ~b) != 0 && (b & ~a) != 0;
                out.push_back(sep);
                found.insert({a, b});
            }
        });
        if (a == full) break;
    }
    // Separators form an order filter, so minimality is a local test.
    for (auto& sep : out) {
        bool minimal = true;
        Mask shrinkable = sep.a & sep.b;
        Mask bits = shrinkable;
        while (bits && minimal) {
            Mask bit = bits & (0u - bits);
            if (found.count({sep.a & ~bit, sep.b}) || found.count({sep.a, sep.b & ~bit}))
                minimal = false;
            bits &= bits - 1;
        }
        sep.minimal = minimal;
    }
    std::sort(out.begin(), out.end(), [](const FreeSeparator& x, const FreeSeparator& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    return out;
}

std::vector<FreeSeparator> minimal_free_separators(const Matroid& l) {
    std::vector<FreeSeparator> out;
    for (const auto& sep : free_separators(l))
        if (sep.minimal) out.push_back(sep);
    return out;
}

bool is_irreducible(const Matroid& l) {
    return irreducible_from_cyclic_flats(l.size(), l.family(FamilyKind::cyclic_flats));
}

std::vector<Mask> clone_classes(const Matroid& l) {
    const auto& zs = l.family(FamilyKind::cyclic_flats);
    const int n = l.size();
    std::vector<std::vector<char>> sig(static_cast<size_t>(n),
                                       std::vector<char>(zs.size(), 0));
    for (size_t zi = 0; zi < zs.size(); ++zi)
        for (int e = 0; e < n; ++e)
            if (zs[zi] & (Mask{1} << e)) sig[static_cast<size_t>(e)][zi] = 1;
    std::vector<Mask> classes;
    std::vector<char> assigned(static_cast<size_t>(n), 0);
    for (int e = 0; e < n; ++e) {
        if (assigned[static_cast<size_t>(e)]) continue;
        Mask cls = Mask{1} << e;
        for (int f = e + 1; f < n; ++f)
            if (!assigned[static_cast<size_t>(f)] &&
                sig[static_cast<size_t>(e)] == sig[static_cast<size_t>(f)]) {
                cls |= Mask{1} << f;
                assigned[static_cast<size_t>(f)] = 1;
            }
        assigned[static_cast<size_t>(e)] = 1;
        classes.push_back(cls);
    }
    return classes;
}

bool is_nested(const Matroid& l) {
    auto zs = l.family(FamilyKind::cyclic_flats);
    std::sort(zs.begin(), zs.end(),
              [](Mask x, Mask y) { return std::pair(popcount(x), x) < std::pair(popcount(y), y); });
    for (size_t i = 1; i < zs.size(); ++i)
        if (!is_subset(zs[i - 1], zs[i])) return false;
    return true;
}

namespace {

// Nontrivial separators ordered by overlap size, smallest subproblems first.
std::vector<std::pair<Mask, Mask>> nontrivial_separators(const Matroid& l) {
    std::vector<std::pair<Mask, Mask>> out;
    for (const auto& sep : free_separators(l))
        if (sep.nontrivial) out.emplace_back(sep.a, sep.b);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::pair(popcount(x.first & x.second), x) <
               std::pair(popcount(y.first & y.second), y);
    });
    return out;
}

struct DecompositionSearch {
    // Decomposability depends only on the rank table, so memoize on it.
    std::map<std::vector<std::uint8_t>, std::optional<std::pair<Mask, Mask>>> memo;

    bool decomposable(const Matroid& l) {
        if (l.size() <= 1) return l.size() == 1;
        auto it = memo.find(l.rank_table());
        if (it != memo.end()) return it->second.has_value();
        memo.emplace(l.rank_table(), std::nullopt);  // guard against rework
        for (const auto& [a, b] : nontrivial_separators(l)) {
            Matroid left = restrict_to(l, a);
            Matroid right = contract_to(l, b);
            if (decomposable(left) && decomposable(right)) {
                memo[l.rank_table()] = std::pair(a, b);
                return true;
            }
        }
        return false;
    }

    std::unique_ptr<FactorTree::Node> build(const Matroid& l) {
        auto node = std::make_unique<FactorTree::Node>();
        node->ground = l.ground().labels();
        if (l.size() == 1) {
            node->leaf = true;
            node->leaf_label = l.ground().label(0);
            node->leaf_is_loop = l.rank() == 0;
            return node;
        }
        auto sep = memo.at(l.rank_table());
        node->a = l.ground().labels_of(sep->first);
        node->b = l.ground().labels_of(sep->second);
        node->left = build(restrict_to(l, sep->first));
        node->right = build(contract_to(l, sep->second));
        return node;
    }
};

}  // namespace

std::optional<FactorTree> splice_decomposition(const Matroid& l) {
    if (l.size() == 0) return std::nullopt;
    DecompositionSearch search;
    if (!search.decomposable(l)) return std::nullopt;
    FactorTree tree;
    tree.root = search.build(l);
    return tree;
}

std::string factor_tree_to_dot(const FactorTree& tree) {
    std::string out = "digraph factor_tree {\n  node [shape=box];\n";
    int counter = 0;
    auto emit = [&](auto&& self, const FactorTree::Node& node) -> int {
        int id = counter++;
        std::string label;
        if (node.leaf) {
            label = node.leaf_label + (node.leaf_is_loop ? " (loop)" : " (isthmus)");
        } else {
            auto join = [](const std::vector<std::string>& v) {
                std::string s;
                for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
                return s;
            };
            label = "A={" + join(node.a) + "} B={" + join(node.b) + "}";
        }
        out += "  n" + std::to_string(id) + " [label=\"" + label + "\"];\n";
        if (!node.leaf) {
            int lid = self(self, *node.left);
            int rid = self(self, *node.right);
            out += "  n" + std::to_string(id) + " -> n" + std::to_string(lid) + ";\n";
            out += "  n" + std::to_string(id) + " -> n" + std::to_string(rid) + ";\n";
        }
        return id;
    };
    if (tree.root) emit(emit, *tree.root);
    out += "}\n";
    return out;
}

std::vector<Mask> cyclic_flats_of_flat_family(const std::vector<Mask>& flats) {
    std::unordered_set<Mask> fam(flats.begin(), flats.end());
    std::vector<Mask> out;
    for (Mask f : flats) {
        bool cyclic = true;
        Mask bits = f;
        while (bits) {
            Mask bit = bits & (0u - bits);
            if (fam.count(f & ~bit)) { cyclic = false; break; }
            bits &= bits - 1;
        }
        if (cyclic) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool irreducible_from_cyclic_flats(int n, const std::vector<Mask>& cyclic_flats) {
    if (n <= 1) return true;
    for (int x = 0; x < n; ++x) {
        Mask bit = Mask{1} << x;
        Mask common = 0;
        bool any = false;
        for (Mask z : cyclic_flats)
            if (z & bit) {
                common = any ? (common & z) : z;
                any = true;
            }
        if (!any || common != bit) return false;
    }
    return true;
}

}  // namespace matspl::factor
