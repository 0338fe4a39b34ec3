#include "matspl/matroid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace matspl {

const char* family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::independent: return "independent";
        case FamilyKind::bases: return "bases";
        case FamilyKind::circuits: return "circuits";
        case FamilyKind::spanning: return "spanning";
        case FamilyKind::flats: return "flats";
        case FamilyKind::cyclic_flats: return "cyclic_flats";
        case FamilyKind::cyclic_sets: return "cyclic_sets";
        case FamilyKind::loops: return "loops";
        case FamilyKind::isthmuses: return "isthmuses";
    }
    return "?";
}

bool SubsetFamily::contains(Mask m) const {
    return std::binary_search(members.begin(), members.end(), m);
}

Matroid Matroid::unchecked(GroundSet ground, std::vector<std::uint8_t> table) {
    auto data = std::make_shared<Data>();
    data->ground = std::move(ground);
    data->table = std::move(table);
    return Matroid(std::move(data));
}

Mask Matroid::closure(Mask subset) const {
    Mask out = subset;
    int r = rank(subset);
    Mask rest = full() & ~subset;
    while (rest) {
        Mask bit = rest & (0u - rest);
        if (rank(subset | bit) == r) out |= bit;
        rest ^= bit;
    }
    return out;
}

Mask Matroid::loops() const {
    Mask out = 0;
    for (int i = 0; i < size(); ++i)
        if (rank(Mask{1} << i) == 0) out |= Mask{1} << i;
    return out;
}

Mask Matroid::isthmuses() const {
    Mask out = 0;
    int r = rank();
    for (int i = 0; i < size(); ++i)
        if (rank(full() & ~(Mask{1} << i)) < r) out |= Mask{1} << i;
    return out;
}

namespace {

std::vector<Mask> compute_family(const Matroid& m, FamilyKind kind) {
    const Mask full = m.full();
    const int r = m.rank();
    std::vector<Mask> out;

    auto is_cyclic = [&](Mask x) {
        Mask rest = x;
        while (rest) {
            Mask bit = rest & (0u - rest);
            if (m.rank(x & ~bit) < m.rank(x)) return false;
            rest ^= bit;
        }
        return true;
    };
    auto is_flat = [&](Mask x) {
        Mask rest = full & ~x;
        while (rest) {
            Mask bit = rest & (0u - rest);
            if (m.rank(x | bit) == m.rank(x)) return false;
            rest ^= bit;
        }
        return true;
    };

    switch (kind) {
        case FamilyKind::independent:
            for (Mask x = 0; ; ++x) {
                if (m.rank(x) == popcount(x)) out.push_back(x);
                if (x == full) break;
            }
            break;
        case FamilyKind::bases:
            for (Mask x = 0; ; ++x) {
                if (popcount(x) == r && m.rank(x) == r) out.push_back(x);
                if (x == full) break;
            }
            break;
        case FamilyKind::circuits:
            for (Mask x = 0; ; ++x) {
                int k = popcount(x);
                if (k > 0 && m.rank(x) == k - 1) {
                    bool minimal = true;
                    Mask rest = x;
                    while (rest) {
                        Mask bit = rest & (0u - rest);
                        if (m.rank(x & ~bit) < k - 1) { minimal = false; break; }
                        rest ^= bit;
                    }
                    if (minimal) out.push_back(x);
                }
                if (x == full) break;
            }
            break;
        case FamilyKind::spanning:
            for (Mask x = 0; ; ++x) {
                if (m.rank(x) == r) out.push_back(x);
                if (x == full) break;
            }
            break;
        case FamilyKind::flats:
            for (Mask x = 0; ; ++x) {
                if (is_flat(x)) out.push_back(x);
                if (x == full) break;
            }
            break;
        case FamilyKind::cyclic_sets:
            for (Mask x = 0; ; ++x) {
                if (is_cyclic(x)) out.push_back(x);
                if (x == full) break;
            }
            break;
        case FamilyKind::cyclic_flats:
            for (Mask x = 0; ; ++x) {
                if (is_cyclic(x) && is_flat(x)) out.push_back(x);
                if (x == full) break;
            }
            break;
        case FamilyKind::loops:
            out.push_back(m.loops());
            break;
        case FamilyKind::isthmuses:
            out.push_back(m.isthmuses());
            break;
    }
    return out;
}

}  // namespace

const std::vector<Mask>& Matroid::family(FamilyKind kind) const {
    auto idx = static_cast<size_t>(kind);
    {
        std::lock_guard<std::mutex> lock(data_->cache_mutex);
        if (data_->cache[idx]) return *data_->cache[idx];
    }
    auto fam = compute_family(*this, kind);
    std::lock_guard<std::mutex> lock(data_->cache_mutex);
    if (!data_->cache[idx]) data_->cache[idx] = std::move(fam);
    return *data_->cache[idx];
}

SubsetFamily derive(const Matroid& m, FamilyKind kind) {
    return SubsetFamily{m.ground(), m.family(kind), kind};
}

void validate_rank_axioms(const GroundSet& ground, const std::vector<std::uint8_t>& table) {
    const int n = ground.size();
    const Mask full = ground.full();
    if (table.size() != (size_t{1} << n))
        throw Error("rank table has wrong length");
    if (table[0] != 0)
        throw AxiomViolation(AxiomViolation::Kind::normalization, 0, 0, "r(empty) != 0");

    for (Mask x = 0; ; ++x) {
        for (int e = 0; e < n; ++e) {
            Mask bit = Mask{1} << e;
            if (x & bit) continue;
            int lo = table[x], hi = table[x | bit];
            if (hi < lo || hi > lo + 1)
                throw AxiomViolation(AxiomViolation::Kind::unit_increase, x, x | bit,
                                     "r must grow by 0 or 1 per element");
        }
        if (x == full) break;
    }

    if (n <= 10) {
        for (Mask x = 0; ; ++x) {
            for (Mask y = x; ; ++y) {
                if (table[x] + table[y] < table[x | y] + table[x & y])
                    throw AxiomViolation(AxiomViolation::Kind::submodularity, x, y,
                                         "r(X)+r(Y) < r(X|Y)+r(X&Y)");
                if (y == full) break;
            }
            if (x == full) break;
        }
    } else {
        // Local exchange form, equivalent given unit increase and r(0)=0.
        for (Mask x = 0; ; ++x) {
            for (int e = 0; e < n; ++e) {
                if (x & (Mask{1} << e)) continue;
                for (int f = e + 1; f < n; ++f) {
                    if (x & (Mask{1} << f)) continue;
                    Mask xe = x | (Mask{1} << e), xf = x | (Mask{1} << f);
                    if (table[xe] + table[xf] < table[xe | xf] + table[x])
                        throw AxiomViolation(AxiomViolation::Kind::submodularity, xe, xf,
                                             "local submodularity fails");
                }
            }
            if (x == full) break;
        }
    }
}

Matroid from_rank_table(GroundSet ground, const std::vector<int>& table) {
    std::vector<std::uint8_t> bytes;
    bytes.reserve(table.size());
    for (int v : table) {
        if (v < 0 || v > ground.size())
            throw AxiomViolation(AxiomViolation::Kind::unit_increase, 0, 0,
                                 "rank value out of range");
        bytes.push_back(static_cast<std::uint8_t>(v));
    }
    validate_rank_axioms(ground, bytes);
    return Matroid::unchecked(std::move(ground), std::move(bytes));
}

Matroid from_bases(GroundSet ground, const std::vector<Mask>& bases) {
    if (bases.empty()) throw EmptyFamily();
    const int r = popcount(bases[0]);
    for (Mask b : bases) {
        if (!is_subset(b, ground.full())) throw Error("basis not inside the ground set");
        if (popcount(b) != r)
            throw AxiomViolation(AxiomViolation::Kind::unit_increase, bases[0], b,
                                 "bases are not equicardinal");
    }
    const Mask full = ground.full();
    std::vector<std::uint8_t> table(size_t{1} << ground.size(), 0);
    for (Mask x = 0; ; ++x) {
        int best = 0;
        for (Mask b : bases) best = std::max(best, popcount(x & b));
        table[x] = static_cast<std::uint8_t>(best);
        if (x == full) break;
    }
    validate_rank_axioms(ground, table);
    return Matroid::unchecked(std::move(ground), std::move(table));
}

Matroid from_cyclic_flats(GroundSet ground,
                          const std::vector<std::pair<Mask, int>>& flats_with_ranks) {
    const Mask full = ground.full();
    std::set<Mask> seen;
    for (const auto& [z, rz] : flats_with_ranks) {
        if (!is_subset(z, full)) throw Error("cyclic flat not inside the ground set");
        if (rz < 0 || rz > popcount(z))
            throw CyclicFlatMismatch(z, "rank out of range for " + std::to_string(z));
        if (!seen.insert(z).second)
            throw CyclicFlatMismatch(z, "set listed twice");
    }

    std::vector<std::uint8_t> table(size_t{1} << ground.size(), 0);
    for (Mask x = 0; ; ++x) {
        int best = popcount(x);
        for (const auto& [z, rz] : flats_with_ranks)
            best = std::min(best, rz + popcount(x & ~z));
        table[x] = static_cast<std::uint8_t>(best);
        if (x == full) break;
    }
    Matroid m = Matroid::unchecked(ground, table);

    // Reject before axiom validation so a bad system reports the offending set.
    std::vector<std::pair<Mask, int>> derived;
    for (Mask z : compute_family(m, FamilyKind::cyclic_flats))
        derived.emplace_back(z, m.rank(z));
    std::vector<std::pair<Mask, int>> wanted(flats_with_ranks);
    std::sort(wanted.begin(), wanted.end());
    std::sort(derived.begin(), derived.end());
    if (wanted != derived) {
        Mask witness = 0;
        for (const auto& entry : derived)
            if (std::find(wanted.begin(), wanted.end(), entry) == wanted.end()) {
                witness = entry.first;
                break;
            }
        if (witness == 0 && !wanted.empty())
            for (const auto& entry : wanted)
                if (std::find(derived.begin(), derived.end(), entry) == derived.end()) {
                    witness = entry.first;
                    break;
                }
        throw CyclicFlatMismatch(witness, "input is not the cyclic-flat system of a matroid");
    }
    validate_rank_axioms(ground, table);
    return m;
}

Matroid uniform(GroundSet ground, int rank) {
    if (rank < 0 || rank > ground.size()) throw Error("uniform rank out of range");
    const Mask full = ground.full();
    std::vector<std::uint8_t> table(size_t{1} << ground.size(), 0);
    for (Mask x = 0; ; ++x) {
        table[x] = static_cast<std::uint8_t>(std::min(popcount(x), rank));
        if (x == full) break;
    }
    return Matroid::unchecked(std::move(ground), std::move(table));
}

Matroid free_matroid(GroundSet ground) {
    int n = ground.size();
    return uniform(std::move(ground), n);
}

Matroid rank_zero(GroundSet ground) { return uniform(std::move(ground), 0); }

Matroid dual(const Matroid& m) {
    const Mask full = m.full();
    const int r = m.rank();
    std::vector<std::uint8_t> table(m.rank_table().size(), 0);
    for (Mask x = 0; ; ++x) {
        table[x] = static_cast<std::uint8_t>(popcount(x) - r + m.rank(full & ~x));
        if (x == full) break;
    }
    return Matroid::unchecked(m.ground(), std::move(table));
}

Matroid restrict_to(const Matroid& m, Mask x) {
    if (!is_subset(x, m.full())) throw Error("restriction set not inside the ground set");
    GroundSet ground = m.ground().restricted(x);
    std::vector<std::uint8_t> table(size_t{1} << ground.size(), 0);
    const Mask sub_full = ground.full();
    for (Mask y = 0; ; ++y) {
        table[y] = static_cast<std::uint8_t>(m.rank(expand_bits(y, x)));
        if (y == sub_full) break;
    }
    return Matroid::unchecked(std::move(ground), std::move(table));
}

Matroid contract_to(const Matroid& m, Mask x) {
    if (!is_subset(x, m.full())) throw Error("contraction set not inside the ground set");
    GroundSet ground = m.ground().restricted(x);
    const Mask rest = m.full() & ~x;
    const int base = m.rank(rest);
    std::vector<std::uint8_t> table(size_t{1} << ground.size(), 0);
    const Mask sub_full = ground.full();
    for (Mask y = 0; ; ++y) {
        table[y] = static_cast<std::uint8_t>(m.rank(expand_bits(y, x) | rest) - base);
        if (y == sub_full) break;
    }
    return Matroid::unchecked(std::move(ground), std::move(table));
}

Matroid deleted(const Matroid& m, Mask x) { return restrict_to(m, m.full() & ~x); }

Matroid contracted(const Matroid& m, Mask x) { return contract_to(m, m.full() & ~x); }

Matroid direct_sum(const Matroid& m, const Matroid& p) {
    for (const auto& l : p.ground().labels())
        if (m.ground().index_of(l)) throw LabelCollision(l);
    std::vector<std::string> labels = m.ground().labels();
    labels.insert(labels.end(), p.ground().labels().begin(), p.ground().labels().end());
    GroundSet ground(std::move(labels));
    const int nm = m.size();
    const Mask full = ground.full(), m_part = m.full();
    std::vector<std::uint8_t> table(size_t{1} << ground.size(), 0);
    for (Mask x = 0; ; ++x) {
        table[x] = static_cast<std::uint8_t>(m.rank(x & m_part) + p.rank(x >> nm));
        if (x == full) break;
    }
    return Matroid::unchecked(std::move(ground), std::move(table));
}

Matroid reordered(const Matroid& m, const GroundSet& ground) {
    if (ground.size() != m.size()) throw GroundMismatch();
    std::vector<Mask> bit_to_old(static_cast<size_t>(ground.size()));
    for (int i = 0; i < ground.size(); ++i) {
        auto idx = m.ground().index_of(ground.label(i));
        if (!idx) throw GroundMismatch();
        bit_to_old[static_cast<size_t>(i)] = Mask{1} << *idx;
    }
    const Mask full = ground.full();
    std::vector<std::uint8_t> table(m.rank_table().size(), 0);
    for (Mask x = 0; ; ++x) {
        Mask old = 0;
        Mask rest = x;
        while (rest) {
            int b = std::countr_zero(rest);
            old |= bit_to_old[static_cast<size_t>(b)];
            rest &= rest - 1;
        }
        table[x] = static_cast<std::uint8_t>(m.rank(old));
        if (x == full) break;
    }
    return Matroid::unchecked(ground, std::move(table));
}

namespace {

// Per-element invariant: sorted (size, rank) profile of the cyclic flats
// containing the element.
std::vector<std::vector<std::pair<int, int>>> element_signatures(const Matroid& m) {
    const auto& zs = m.family(FamilyKind::cyclic_flats);
    std::vector<std::vector<std::pair<int, int>>> sig(static_cast<size_t>(m.size()));
    for (Mask z : zs)
        for (int e = 0; e < m.size(); ++e)
            if (z & (Mask{1} << e)) sig[static_cast<size_t>(e)].emplace_back(popcount(z), m.rank(z));
    for (auto& s : sig) std::sort(s.begin(), s.end());
    return sig;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const Matroid& m, const Matroid& p) {
    const int n = m.size();
    if (n != p.size() || m.rank() != p.rank()) return std::nullopt;
    if (popcount(m.loops()) != popcount(p.loops())) return std::nullopt;
    if (popcount(m.isthmuses()) != popcount(p.isthmuses())) return std::nullopt;

    auto profile = [](const Matroid& q) {
        std::vector<std::pair<int, int>> prof;
        for (Mask z : q.family(FamilyKind::cyclic_flats)) prof.emplace_back(popcount(z), q.rank(z));
        std::sort(prof.begin(), prof.end());
        return prof;
    };
    if (profile(m) != profile(p)) return std::nullopt;

    auto sig_m = element_signatures(m);
    auto sig_p = element_signatures(p);
    {
        auto a = sig_m;
        auto b = sig_p;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    std::vector<int> image(static_cast<size_t>(n), -1);
    std::vector<bool> used(static_cast<size_t>(n), false);
    // Subset pairs of the assigned prefix; grows by doubling per depth.
    std::vector<std::pair<Mask, Mask>> pairs;
    pairs.reserve(size_t{1} << n);
    pairs.emplace_back(0, 0);

    auto dfs = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        for (int cand = 0; cand < n; ++cand) {
            if (used[static_cast<size_t>(cand)]) continue;
            if (sig_m[static_cast<size_t>(depth)] != sig_p[static_cast<size_t>(cand)]) continue;
            size_t before = pairs.size();
            bool ok = true;
            for (size_t i = 0; i < before; ++i) {
                Mask xm = pairs[i].first | (Mask{1} << depth);
                Mask xp = pairs[i].second | (Mask{1} << cand);
                if (m.rank(xm) != p.rank(xp)) { ok = false; break; }
                pairs.emplace_back(xm, xp);
            }
            if (ok) {
                used[static_cast<size_t>(cand)] = true;
                image[static_cast<size_t>(depth)] = cand;
                if (self(self, depth + 1)) return true;
                used[static_cast<size_t>(cand)] = false;
                image[static_cast<size_t>(depth)] = -1;
            }
            pairs.resize(before);
        }
        return false;
    };
    if (dfs(dfs, 0)) return image;
    return std::nullopt;
}

}  // namespace matspl
