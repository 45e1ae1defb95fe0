#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rlse/catalog.hpp"
#include "rlse/errors.hpp"
#include "rlse/transforms.hpp"

using namespace rlse;

namespace {
constexpr int kA = 1, kAp = 2, kB = 3, kBp = 4;
}

TEST_CASE("boolean_ring") {
    for (int n = 1; n <= 4; ++n) {
        auto ring = boolean_ring(n);
        CHECK(ring.size == (1 << n));
        CHECK(check_boolean_ring(ring));
        CHECK(check_rlse(ring));
        CHECK(check_specific(ring));
        CHECK(ring.element_names[0] == "{}");
    }
    CHECK(boolean_ring(2).element_names[3] == "{1,2}");
    CHECK_THROWS_AS(boolean_ring(0), InvalidIndex);
    CHECK_THROWS_AS(boolean_ring(5), InvalidIndex);
}

TEST_CASE("mo_lattice") {
    for (int n = 1; n <= 3; ++n) {
        auto lat = mo_lattice(n);
        CHECK(lat.size == 2 * n + 2);
        CHECK(check_ortholattice(lat));
        CHECK(check_orthomodular(lat));
    }
    // MO_1 is the four-element Boolean algebra; larger MO_n are not Boolean
    CHECK(is_boolean_algebra(mo_lattice(1)));
    CHECK_FALSE(is_boolean_algebra(mo_lattice(2)).passed);
    CHECK_FALSE(is_boolean_algebra(mo_lattice(3)).passed);
    CHECK(mo_lattice(2).element_names ==
          std::vector<std::string>{"0", "a1", "a1'", "a2", "a2'", "1"});
    CHECK_THROWS_AS(mo_lattice(0), InvalidIndex);
}

TEST_CASE("specific_rlse_mo") {
    for (int n = 1; n <= 3; ++n) {
        auto alg = specific_rlse_mo(n);
        CHECK(check_rlse(alg));
        CHECK(check_specific(alg));
        CHECK(check_characteristic_two(alg));
        CHECK(l_of_r(alg) == mo_lattice(n));
    }
    // atom sums vanish in the specific extension of MO2
    auto alg = specific_rlse_mo(2);
    CHECK(alg.plus(kA, kB) == alg.zero);
    CHECK(alg.plus(kAp, kBp) == alg.zero);
    CHECK_FALSE(check_boolean_ring(alg).passed);
}

TEST_CASE("weakly_associative_mo2") {
    for (int c = 0; c < 6; ++c) {
        auto alg = weakly_associative_mo2(c);
        CHECK(check_rlse(alg));
        CHECK(check_weakly_distributive(alg));
        CHECK(check_weakly_associative(alg));
        CHECK(check_characteristic_two(alg));
        CHECK(alg.plus(kA, kB) == c);
        CHECK(alg.plus(kAp, kBp) == c);
        CHECK(alg.plus(kA, kBp) == l_of_r(alg).comp(c));
        // every variant breaks R5: a + b' = c' but the specific value is 0
        CHECK_FALSE(check_specific(alg).passed);
        CHECK(alg.plus_tab != specific_rlse_mo(2).plus_tab);
    }
    CHECK_THROWS_AS(weakly_associative_mo2(-1), InvalidIndex);
    CHECK_THROWS_AS(weakly_associative_mo2(6), InvalidIndex);
}

TEST_CASE("concrete_mo2_events") {
    auto fam = concrete_mo2_events();
    CHECK(fam.size() == 6);
    CHECK(fam.space.size() == 4);
    CHECK(fam.two_valued);
    CHECK(fam.contains_0_1);
    CHECK(fam.complement_closed);
    CHECK(fam.orthosum_closed);
    CHECK(fam.lattice_ordered);
    CHECK(check_s_probability_algebra(fam));
    CHECK(check_gfe(fam));
    CHECK(rlse_of_events(fam) == specific_rlse_mo(2));
}

TEST_CASE("free_plus_cells") {
    CHECK(free_plus_cells(l_of_r(boolean_ring(1))).empty());
    CHECK(free_plus_cells(l_of_r(boolean_ring(2))).size() == 2);
    auto cells = free_plus_cells(mo_lattice(2));
    REQUIRE(cells.size() == 8);
    // lexicographic: the four diagonals plus the four incomparable atom pairs
    CHECK(cells.front() == std::pair{kA, kA});
    CHECK(cells.back() == std::pair{kBp, kBp});
}

TEST_CASE("enumerate_plus_extensions over 2^2") {
    auto square = l_of_r(boolean_ring(2));
    auto all = enumerate_plus_extensions(square, 1000);
    REQUIRE(all.size() == 16);
    // odometer starts at the all-zero assignment: the Boolean ring itself
    CHECK(all.front() == boolean_ring(2));
    std::set<std::vector<int>> plus_tables;
    for (const auto& alg : all) {
        CHECK(check_rlse(alg));
        CHECK(alg.times_tab == square.meet_tab);
        plus_tables.insert(alg.plus_tab);
    }
    CHECK(plus_tables.size() == all.size());

    SUBCASE("limit truncates") {
        auto one = enumerate_plus_extensions(square, 1);
        REQUIRE(one.size() == 1);
        CHECK(one.front() == all.front());
    }
    SUBCASE("enumeration order is stable") {
        auto again = enumerate_plus_extensions(square, 1000);
        CHECK(again == all);
    }
}

TEST_CASE("the MO2 enumeration reaches the named extensions") {
    std::vector<RingLikeAlgebra> targets = {specific_rlse_mo(2)};
    for (int c = 0; c < 6; ++c) targets.push_back(weakly_associative_mo2(c));
    std::size_t found = 0, first_hit = 0, seen = 0;
    std::vector<bool> hit(targets.size(), false);
    for_each_plus_extension(mo_lattice(2), [&](const RingLikeAlgebra& alg) {
        ++seen;
        for (std::size_t i = 0; i < targets.size(); ++i)
            if (!hit[i] && alg.plus_tab == targets[i].plus_tab) {
                hit[i] = true;
                if (++found == 1) first_hit = seen;
            }
        return found < targets.size();
    });
    CHECK(found == targets.size());
    // the specific extension has all free cells zero, so it comes first
    CHECK(first_hit == 1);
    CHECK(hit[0]);
}

TEST_CASE("enumeration preconditions") {
    CHECK_THROWS_AS(for_each_plus_extension(mo_lattice(4),
                                            [](const RingLikeAlgebra&) { return true; }),
                    TooLarge);
    CHECK_THROWS_AS(for_each_plus_extension(benzene_o6(),
                                            [](const RingLikeAlgebra&) { return true; }),
                    NotOrthomodular);
}

TEST_CASE("benzene_o6") {
    auto lat = benzene_o6();
    CHECK(lat.size == 6);
    CHECK(check_ortholattice(lat));
    auto v = check_orthomodular(lat);
    REQUIRE_FALSE(v.passed);
    REQUIRE(v.witness.size() == 2);
    // the witness really violates x <= y  =>  x v (x' ^ y) = y
    int x = v.witness[0], y = v.witness[1];
    CHECK(lat.leq(x, y));
    CHECK(lat.join(x, lat.meet(lat.comp(x), y)) != y);
}
