#include <doctest.h>

#include <algorithm>

#include "matspl/enumeration.hpp"
#include "matspl/matroid.hpp"
#include "matspl/sampling.hpp"

using namespace matspl;

namespace {

GroundSet abc() { return GroundSet({"a", "b", "c"}); }

Mask mask_of(const Matroid& m, std::initializer_list<const char*> names) {
    Mask out = 0;
    for (const char* s : names) out |= Mask{1} << *m.ground().index_of(s);
    return out;
}

Matroid vamos_from_bases() {
    GroundSet g({"a", "a'", "b", "b'", "c", "c'", "d", "d'"});
    auto mk = [&](std::initializer_list<const char*> names) {
        Mask out = 0;
        for (const char* s : names) out |= Mask{1} << *g.index_of(s);
        return out;
    };
    std::vector<Mask> nonbases = {
        mk({"a", "a'", "b", "b'"}), mk({"a", "a'", "c", "c'"}), mk({"b", "b'", "c", "c'"}),
        mk({"b", "b'", "d", "d'"}), mk({"c", "c'", "d", "d'"})};
    std::vector<Mask> bases;
    for (Mask x = 0; x <= g.full(); ++x)
        if (popcount(x) == 4 &&
            std::find(nonbases.begin(), nonbases.end(), x) == nonbases.end())
            bases.push_back(x);
    return from_bases(g, bases);
}

}  // namespace

TEST_CASE("rank table constructor validates the axioms") {
    CHECK(from_rank_table(GroundSet({"a", "b"}), {0, 0, 0, 0}).rank() == 0);
    Matroid free3 = from_rank_table(abc(), {0, 1, 1, 2, 1, 2, 2, 3});
    CHECK(free3 == free_matroid(abc()));

    CHECK_THROWS_AS(from_rank_table(GroundSet({"a", "b"}), {1, 1, 1, 1}), AxiomViolation);
    CHECK_THROWS_AS(from_rank_table(GroundSet({"a", "b"}), {0, 2, 1, 2}), AxiomViolation);
    // U_{1,2} + U_{1,2} glued badly: submodularity fails.
    CHECK_THROWS_AS(from_rank_table(abc(), {0, 1, 1, 1, 1, 1, 1, 2}), AxiomViolation);
}

TEST_CASE("bases constructor") {
    GroundSet g = abc();
    std::vector<Mask> two_subsets = {0b011, 0b101, 0b110};
    Matroid u23 = from_bases(g, two_subsets);
    CHECK(u23 == uniform(abc(), 2));

    CHECK_THROWS_AS(from_bases(g, {}), EmptyFamily);
    // Exchange fails for {{a,b},{c,d}}.
    GroundSet g4({"a", "b", "c", "d"});
    CHECK_THROWS_AS(from_bases(g4, {0b0011, 0b1100}), AxiomViolation);
}

TEST_CASE("vamos cube from bases has the expected cyclic flats") {
    Matroid v8 = vamos_from_bases();
    CHECK(v8.rank() == 4);
    auto zs = v8.family(FamilyKind::cyclic_flats);
    // Empty set, the five 4-element planes, and the full set.
    CHECK(zs.size() == 7);
    int planes = 0;
    for (Mask z : zs)
        if (popcount(z) == 4) {
            CHECK(v8.rank(z) == 3);
            ++planes;
        }
    CHECK(planes == 5);
    CHECK(!zs.empty());
    CHECK(zs.front() == 0);
    CHECK(zs.back() == v8.full());
}

TEST_CASE("cyclic flats constructor") {
    // Free matroid: no circuits at all.
    Matroid free3 = from_cyclic_flats(abc(), {{0, 0}});
    CHECK(free3 == free_matroid(abc()));

    // Two rank-1 cyclic flats sharing an element cannot happen.
    GroundSet g = abc();
    CHECK_THROWS_AS(from_cyclic_flats(g, {{0, 0}, {0b011, 1}, {0b101, 1}, {0b111, 2}}),
                    CyclicFlatMismatch);
    // Brute-force cross-check: no matroid on three elements has that system.
    bool found = false;
    enumeration::for_each_matroid(g, [&](const Matroid& m) {
        auto zs = m.family(FamilyKind::cyclic_flats);
        if (zs == std::vector<Mask>{0b000, 0b011, 0b101, 0b111} && m.rank(0b011) == 1 &&
            m.rank(0b101) == 1 && m.rank() == 2)
            found = true;
    });
    CHECK(!found);

    CHECK_THROWS_AS(from_cyclic_flats(g, {{0, 0}, {0, 0}}), CyclicFlatMismatch);
}

TEST_CASE("cyclic flats reconstruct every corpus matroid") {
    sampling::Rng rng(7);
    for (const auto& m : sampling::corpus(rng, 8, 25)) {
        std::vector<std::pair<Mask, int>> zs;
        for (Mask z : m.family(FamilyKind::cyclic_flats)) zs.emplace_back(z, m.rank(z));
        CHECK(from_cyclic_flats(m.ground(), zs) == m);
    }
}

TEST_CASE("derived families") {
    Matroid u23 = uniform(abc(), 2);
    CHECK(u23.family(FamilyKind::cyclic_flats) == std::vector<Mask>{0, 0b111});

    Matroid istar = dual(free_matroid(abc()));
    CHECK(istar.loops() == istar.full());
    CHECK(derive(istar, FamilyKind::loops).members == std::vector<Mask>{0b111});
    CHECK(free_matroid(abc()).isthmuses() == 0b111);
}

TEST_CASE("duality") {
    Matroid u24 = uniform(GroundSet::numbered(4), 2);
    CHECK(dual(u24) == u24);
    CHECK(dual(free_matroid(abc())) == rank_zero(abc()));

    Matroid v8 = vamos_from_bases();
    CHECK(dual(dual(v8)) == v8);

    // B(M*) is the complement family of B(M).
    sampling::Rng rng(11);
    for (const auto& m : sampling::corpus(rng, 7, 15)) {
        auto bases = m.family(FamilyKind::bases);
        std::vector<Mask> complements;
        for (Mask b : bases) complements.push_back(m.full() & ~b);
        std::sort(complements.begin(), complements.end());
        CHECK(dual(m).family(FamilyKind::bases) == complements);
    }
}

TEST_CASE("cyclic flats are flats intersect cyclic sets") {
    sampling::Rng rng(13);
    for (const auto& m : sampling::corpus(rng, 7, 15)) {
        auto flats = m.family(FamilyKind::flats);
        auto cyclic = m.family(FamilyKind::cyclic_sets);
        std::vector<Mask> meet;
        std::set_intersection(flats.begin(), flats.end(), cyclic.begin(), cyclic.end(),
                              std::back_inserter(meet));
        CHECK(meet == m.family(FamilyKind::cyclic_flats));
    }
}

TEST_CASE("minors") {
    Matroid u23 = uniform(abc(), 2);
    CHECK(restrict_to(u23, 0b011) == uniform(GroundSet({"a", "b"}), 2));
    CHECK(restrict_to(u23, u23.full()) == u23);

    Matroid v8 = vamos_from_bases();
    Mask keep = v8.full() & ~mask_of(v8, {"b'"});
    Matroid contracted_v8 = contract_to(v8, keep);
    CHECK(contracted_v8.rank() == 3);
    // Oracle: contraction rank arithmetic on the table.
    for (Mask y = 0; y <= contracted_v8.full(); ++y) {
        Mask lifted = expand_bits(y, keep);
        CHECK(contracted_v8.rank(y) == v8.rank(lifted | mask_of(v8, {"b'"})) - 1);
    }

}

TEST_CASE("deletion and contraction commute") {
    sampling::Rng rng(19);
    for (const auto& m : sampling::corpus(rng, 6, 12)) {
        Mask full = m.full();
        for (int trial = 0; trial < 6; ++trial) {
            Mask x = static_cast<Mask>(rng()) & full;
            Mask y = static_cast<Mask>(rng()) & full & ~x;
            // Delete x then contract y, versus contract y then delete x.
            Matroid del_first = deleted(m, x);
            Mask y_in = del_first.ground().mask_of(
                std::span<const std::string>(m.ground().labels_of(y)));
            Matroid a = contracted(del_first, y_in);

            Matroid con_first = contracted(m, y);
            Mask x_in = con_first.ground().mask_of(
                std::span<const std::string>(m.ground().labels_of(x)));
            Matroid b = deleted(con_first, x_in);
            CHECK(a == b);
        }
    }
}

TEST_CASE("direct sum") {
    Matroid sum = direct_sum(free_matroid(GroundSet({"a", "b"})),
                             rank_zero(GroundSet({"x", "y"})));
    CHECK(sum.rank() == 2);
    CHECK(sum.loops() == mask_of(sum, {"x", "y"}));
    CHECK(sum.isthmuses() == mask_of(sum, {"a", "b"}));

    Matroid u12a = uniform(GroundSet({"a1", "a2"}), 1);
    Matroid u12b = uniform(GroundSet({"b1", "b2"}), 1);
    Matroid u12c = uniform(GroundSet({"c1", "c2"}), 1);
    Matroid m = direct_sum(direct_sum(u12a, u12b), u12c);
    CHECK(m.rank() == 3);

    CHECK_THROWS_AS(direct_sum(u12a, u12a), LabelCollision);
}

TEST_CASE("isomorphism") {
    Matroid u23 = uniform(abc(), 2);
    Matroid relabeled = uniform(GroundSet({"x", "y", "z"}), 2);
    CHECK(is_isomorphic(u23, relabeled).has_value());
    CHECK(!is_isomorphic(u23, uniform(abc(), 1)).has_value());

    // The bijection really carries bases to bases.
    auto image = is_isomorphic(u23, relabeled);
    REQUIRE(image.has_value());
    for (Mask b : u23.family(FamilyKind::bases)) {
        Mask mapped = 0;
        for (int e = 0; e < 3; ++e)
            if (b & (Mask{1} << e)) mapped |= Mask{1} << (*image)[static_cast<size_t>(e)];
        CHECK(relabeled.rank(mapped) == 2);
    }
}

TEST_CASE("axiom validation is exhaustive on corpus members") {
    sampling::Rng rng(23);
    for (const auto& m : sampling::corpus(rng, 8, 20))
        CHECK_NOTHROW(validate_rank_axioms(m.ground(), m.rank_table()));
}
