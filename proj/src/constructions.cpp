#include "matspl/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "matspl/higgs.hpp"
#include "matspl/orders.hpp"

namespace matspl::constructions {

Matroid graphic(const std::vector<std::pair<std::string, std::string>>& edges,
                std::vector<std::string> element_labels) {
    if (element_labels.empty()) {
        std::map<std::string, int> counts;
        for (const auto& [u, v] : edges) {
            std::string base = u + "-" + v;
            int c = counts[base]++;
            element_labels.push_back(c == 0 ? base : base + "#" + std::to_string(c + 1));
        }
    }
    if (element_labels.size() != edges.size())
        throw Error("one element label per edge required");
    GroundSet ground(element_labels);

    std::vector<std::string> vertices;
    auto vertex_id = [&](const std::string& v) {
        auto it = std::find(vertices.begin(), vertices.end(), v);
        if (it != vertices.end()) return static_cast<int>(it - vertices.begin());
        vertices.push_back(v);
        return static_cast<int>(vertices.size()) - 1;
    };
    std::vector<std::pair<int, int>> ends;
    ends.reserve(edges.size());
    for (const auto& [u, v] : edges) ends.emplace_back(vertex_id(u), vertex_id(v));

    const Mask full = ground.full();
    const int nv = static_cast<int>(vertices.size());
    std::vector<int> parent(static_cast<size_t>(nv));
    std::vector<std::uint8_t> table(size_t{1} << ground.size(), 0);
    for (Mask x = 0; ; ++x) {
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int a) {
            while (parent[static_cast<size_t>(a)] != a) {
                parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
                a = parent[static_cast<size_t>(a)];
            }
            return a;
        };
        int rank = 0;
        Mask bits = x;
        while (bits) {
            int e = std::countr_zero(bits);
            int a = find(ends[static_cast<size_t>(e)].first);
            int b = find(ends[static_cast<size_t>(e)].second);
            if (a != b) {
                parent[static_cast<size_t>(a)] = b;
                ++rank;
            }
            bits &= bits - 1;
        }
        table[x] = static_cast<std::uint8_t>(rank);
        if (x == full) break;
    }
    return Matroid::unchecked(std::move(ground), std::move(table));
}

Matroid complete_graph(int vertices) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (int u = 0; u < vertices; ++u)
        for (int v = u + 1; v < vertices; ++v)
            edges.emplace_back("v" + std::to_string(u), "v" + std::to_string(v));
    return graphic(edges);
}

Matroid projective_geometry(int rank, int p) {
    gf::check_prime(p);
    int cap = p == 2 ? 4 : (p == 3 ? 3 : 2);
    if (rank < 1 || rank > cap)
        throw SizeCapExceeded("projective geometry of rank " + std::to_string(rank) +
                              " over GF(" + std::to_string(p) + ")");
    std::vector<std::vector<int>> points;
    std::vector<int> vec(static_cast<size_t>(rank), 0);
    auto gen = [&](auto&& self, int pos) -> void {
        if (pos == rank) {
            auto first = std::find_if(vec.begin(), vec.end(), [](int v) { return v != 0; });
            if (first != vec.end() && *first == 1) points.push_back(vec);
            return;
        }
        for (int v = 0; v < p; ++v) {
            vec[static_cast<size_t>(pos)] = v;
            self(self, pos + 1);
        }
    };
    gen(gen, 0);

    gf::GFMatrix mat;
    mat.p = p;
    mat.rows = rank;
    mat.cols = static_cast<int>(points.size());
    mat.entries.assign(static_cast<size_t>(mat.rows) * mat.cols, 0);
    for (int c = 0; c < mat.cols; ++c) {
        std::string label;
        for (int r = 0; r < rank; ++r) {
            mat.at(r, c) = static_cast<std::uint8_t>(points[static_cast<size_t>(c)][static_cast<size_t>(r)]);
            label += std::to_string(points[static_cast<size_t>(c)][static_cast<size_t>(r)]);
        }
        mat.col_labels.push_back(label);
    }
    return gf::column_matroid(mat);
}

Matroid transversal(const SetSystem& system) {
    const int n = system.ground.size();
    const int m = static_cast<int>(system.sets.size());
    const Mask full = system.ground.full();
    std::vector<std::uint8_t> table(size_t{1} << n, 0);

    std::vector<int> match_set(static_cast<size_t>(m));
    std::vector<char> visited(static_cast<size_t>(m));
    for (Mask x = 0; ; ++x) {
        std::fill(match_set.begin(), match_set.end(), -1);
        int rank = 0;
        Mask bits = x;
        while (bits) {
            int e = std::countr_zero(bits);
            std::fill(visited.begin(), visited.end(), 0);
            auto augment = [&](auto&& self, int elem) -> bool {
                for (int s = 0; s < m; ++s) {
                    if (visited[static_cast<size_t>(s)]) continue;
                    if (!(system.sets[static_cast<size_t>(s)] & (Mask{1} << elem))) continue;
                    visited[static_cast<size_t>(s)] = 1;
                    if (match_set[static_cast<size_t>(s)] < 0 ||
                        self(self, match_set[static_cast<size_t>(s)])) {
                        match_set[static_cast<size_t>(s)] = elem;
                        return true;
                    }
                }
                return false;
            };
            if (augment(augment, e)) ++rank;
            bits &= bits - 1;
        }
        table[x] = static_cast<std::uint8_t>(rank);
        if (x == full) break;
    }
    return Matroid::unchecked(system.ground, std::move(table));
}

namespace {

std::string edge_label(int u, int v) {
    return "v" + std::to_string(u) + "v" + std::to_string(v);
}

}  // namespace

Matroid simplex_bicircular(int n) {
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) labels.push_back(edge_label(u, v));
    GroundSet ground(labels);
    SetSystem system{ground, {}};
    for (int v = 0; v < n; ++v) {
        Mask set = Mask{1} << v;
        int idx = n;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b, ++idx)
                if (a == v || b == v) set |= Mask{1} << idx;
        system.sets.push_back(set);
    }
    return transversal(system);
}

Matroid simplex_bicircular_edges(int n) {
    std::vector<std::string> labels;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) labels.push_back(edge_label(u, v));
    GroundSet ground(labels);
    SetSystem system{ground, {}};
    for (int v = 0; v < n; ++v) {
        Mask set = 0;
        int idx = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b, ++idx)
                if (a == v || b == v) set |= Mask{1} << idx;
        system.sets.push_back(set);
    }
    return transversal(system);
}

Matroid wheel(int spokes) {
    if (spokes < 2) throw Error("a wheel needs at least two spokes");
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> labels;
    for (int i = 0; i < spokes; ++i) {
        edges.emplace_back("hub", "rim" + std::to_string(i));
        labels.push_back("s" + std::to_string(i));
    }
    for (int i = 0; i < spokes; ++i) {
        edges.emplace_back("rim" + std::to_string(i), "rim" + std::to_string((i + 1) % spokes));
        labels.push_back("r" + std::to_string(i));
    }
    return graphic(edges, labels);
}

Matroid whirl(int spokes) {
    if (spokes == 3) {
        GroundSet ground({"c", "c'", "d", "e", "f", "g"});
        auto mask = [&](std::initializer_list<const char*> names) {
            Mask m = 0;
            for (const char* s : names) m |= Mask{1} << *ground.index_of(s);
            return m;
        };
        return from_cyclic_flats(ground, {{0, 0},
                                          {mask({"e", "f", "g"}), 2},
                                          {mask({"c'", "d", "g"}), 2},
                                          {mask({"c", "d", "e"}), 2},
                                          {ground.full(), 3}});
    }
    Matroid w = wheel(spokes);
    // Relax the rim circuit-hyperplane.
    Mask rim = 0;
    for (int i = 0; i < spokes; ++i)
        rim |= Mask{1} << *w.ground().index_of("r" + std::to_string(i));
    std::vector<std::uint8_t> table = w.rank_table();
    table[rim] = static_cast<std::uint8_t>(spokes);
    return Matroid::unchecked(w.ground(), std::move(table));
}

Matroid vamos() {
    GroundSet ground({"a", "a'", "b", "b'", "c", "c'", "d", "d'"});
    auto mask = [&](std::initializer_list<const char*> names) {
        Mask m = 0;
        for (const char* s : names) m |= Mask{1} << *ground.index_of(s);
        return m;
    };
    return from_cyclic_flats(ground, {{0, 0},
                                      {mask({"a", "a'", "b", "b'"}), 3},
                                      {mask({"a", "a'", "c", "c'"}), 3},
                                      {mask({"b", "b'", "c", "c'"}), 3},
                                      {mask({"b", "b'", "d", "d'"}), 3},
                                      {mask({"c", "c'", "d", "d'"}), 3},
                                      {ground.full(), 4}});
}

bool is_base_orderable(const Matroid& l) {
    const auto& bases = l.family(FamilyKind::bases);
    const int r = l.rank();
    for (size_t i = 0; i < bases.size(); ++i) {
        for (size_t j = i + 1; j < bases.size(); ++j) {
            Mask b1 = bases[i], b2 = bases[j];
            std::vector<int> left, right;
            for (int e = 0; e < l.size(); ++e) {
                if (b1 & (Mask{1} << e)) left.push_back(e);
                if (b2 & (Mask{1} << e)) right.push_back(e);
            }
            auto is_basis = [&](Mask x) {
                return std::binary_search(bases.begin(), bases.end(), x);
            };
            // Exchangeability graph; a perfect matching must exist.
            std::vector<std::vector<char>> edge(static_cast<size_t>(r),
                                                std::vector<char>(static_cast<size_t>(r), 0));
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) {
                    Mask x = Mask{1} << left[static_cast<size_t>(a)];
                    Mask y = Mask{1} << right[static_cast<size_t>(b)];
                    edge[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                        is_basis((b1 & ~x) | y) && is_basis((b2 & ~y) | x);
                }
            std::vector<int> match(static_cast<size_t>(r), -1);
            std::vector<char> seen(static_cast<size_t>(r));
            int matched_count = 0;
            for (int a = 0; a < r; ++a) {
                std::fill(seen.begin(), seen.end(), 0);
                auto augment = [&](auto&& self, int u) -> bool {
                    for (int b = 0; b < r; ++b) {
                        if (seen[static_cast<size_t>(b)] || !edge[static_cast<size_t>(u)][static_cast<size_t>(b)])
                            continue;
                        seen[static_cast<size_t>(b)] = 1;
                        if (match[static_cast<size_t>(b)] < 0 || self(self, match[static_cast<size_t>(b)])) {
                            match[static_cast<size_t>(b)] = u;
                            return true;
                        }
                    }
                    return false;
                };
                if (augment(augment, a)) ++matched_count;
            }
            if (matched_count < r) return false;
        }
    }
    return true;
}

bool has_uniform_line_minor(const Matroid& l, int points) {
    const Mask full = l.full();
    const int r = l.rank();
    for (Mask c = 0; ; ++c) {
        if (r - l.rank(c) == 2) {
            std::set<Mask> classes;
            Mask rest = full & ~c;
            Mask bits = rest;
            while (bits) {
                Mask bit = bits & (0u - bits);
                bits &= bits - 1;
                if (l.rank(c | bit) == l.rank(c)) continue;  // loop after contraction
                Mask cls = 0;
                Mask others = rest;
                while (others) {
                    Mask ob = others & (0u - others);
                    if (l.rank(c | bit | ob) == l.rank(c | bit)) cls |= ob;
                    others &= others - 1;
                }
                classes.insert(cls);
            }
            if (static_cast<int>(classes.size()) >= points) return true;
        }
        if (c == full) break;
    }
    return false;
}

FactorizationReport higgs_factorization_report(const Matroid& g) {
    if (g.size() > 7) throw SizeCapExceeded("factorization search beyond 7 elements");
    FactorizationReport report;
    std::vector<Matroid> quotients = orders::proper_quotients(g);
    std::vector<Matroid> lifts;
    for (const auto& q : orders::proper_quotients(dual(g))) lifts.push_back(dual(q));

    for (const auto& q : quotients) {
        for (const auto& l : lifts) {
            int max_step = l.rank() - q.rank();
            for (int j = 0; j <= max_step; ++j) {
                if (higgs::higgs_lift(l, q, j) != g) continue;
                HiggsFactorization item;
                item.quotient = q;
                item.lift = l;
                item.step = j;
                if (j == 1) {
                    for (int e = 0; e < g.size(); ++e) {
                        Mask bit = Mask{1} << e;
                        if (q != higgs::principal_truncation(g, bit, 1)) continue;
                        if (l != higgs::principal_lift(g, bit, 1)) continue;
                        if (q.loops() != bit || l.isthmuses() != bit) continue;
                        item.principal = true;
                        item.element = g.ground().label(e);
                        break;
                    }
                }
                report.factorizations.push_back(std::move(item));
            }
        }
    }
    report.hypothesis_holds = true;
    for (const auto& item : report.factorizations)
        if (item.step != 1 || !item.principal) report.hypothesis_holds = false;
    return report;
}

}  // namespace matspl::constructions
