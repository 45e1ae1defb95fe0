#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "helpers.hpp"
#include "rlse/catalog.hpp"
#include "rlse/errors.hpp"
#include "rlse/io.hpp"
#include "rlse/transforms.hpp"

using namespace rlse;
using namespace rlse::testing;

TEST_CASE("algebra round trip through a stream") {
    for (const auto& alg : {boolean_ring(2), specific_rlse_mo(2),
                            weakly_associative_mo2(3)}) {
        std::stringstream ss;
        write_algebra(ss, alg);
        auto back = read_algebra(ss);
        REQUIRE(std::holds_alternative<RingLikeAlgebra>(back));
        CHECK(std::get<RingLikeAlgebra>(back) == alg);
    }
}

TEST_CASE("lattice round trip through a stream") {
    for (const auto& lat : {mo_lattice(2), benzene_o6(), l_of_r(boolean_ring(3))}) {
        std::stringstream ss;
        write_algebra(ss, lat);
        auto back = read_algebra(ss);
        REQUIRE(std::holds_alternative<OrthoLattice>(back));
        CHECK(std::get<OrthoLattice>(back) == lat);
    }
}

TEST_CASE("written output is stable") {
    std::stringstream a, b;
    write_algebra(a, specific_rlse_mo(2));
    write_algebra(b, specific_rlse_mo(2));
    CHECK(a.str() == b.str());
}

TEST_CASE("comments and blank lines are ignored") {
    std::stringstream ss;
    ss << "# two-element ring\n\nrlse 2 0 1  # header\n"
          "names 0 1\n0 1\n1 0\n\n0 0\n0 1\n";
    auto back = read_algebra(ss);
    REQUIRE(std::holds_alternative<RingLikeAlgebra>(back));
    CHECK(std::get<RingLikeAlgebra>(back) == boolean_ring(1));
}

TEST_CASE("names line is optional") {
    std::stringstream ss;
    ss << "rlse 2 0 1\n0 1\n1 0\n0 0\n0 1\n";
    auto back = read_algebra(ss);
    auto alg = std::get<RingLikeAlgebra>(back);
    CHECK(alg.element_names.empty());
    CHECK(alg.plus_tab == boolean_ring(1).plus_tab);
}

TEST_CASE("algebra parse errors") {
    auto reject = [](const std::string& text) {
        std::stringstream ss(text);
        CHECK_THROWS_AS(read_algebra(ss), ParseError);
    };
    reject("");
    reject("rlse 2 0\n");                        // short header
    reject("ring 2 0 1\n0 1\n1 0\n0 0\n0 1\n");  // unknown kind
    reject("rlse 0 0 0\n");                      // empty carrier
    reject("rlse 2 0 1\n0 1\n1 0\n0 0\n");       // truncated times matrix
    reject("rlse 2 0 1\n0 1 1\n1 0\n0 0\n0 1\n");  // ragged row
    reject("rlse 2 0 1\n0 x\n1 0\n0 0\n0 1\n");    // non-numeric entry
    reject("rlse 2 0 1\nnames a\n0 1\n1 0\n0 0\n0 1\n");  // short names line
    reject("oml 2 0 1\n0 0\n0 1\n0 1\n1 1\n");     // missing comp row
    reject("rlse 2 0 1\n0 5\n1 0\n0 0\n0 1\n");    // entry out of range
}

TEST_CASE("event family round trip through a stream") {
    for (const auto& fam : {concrete_mo2_events(), power_set_family(2),
                            four_element_boolean_family()}) {
        std::stringstream ss;
        write_events(ss, fam);
        auto back = read_events(ss);
        CHECK(back.space.labels == fam.space.labels);
        CHECK(back.events == fam.events);
        CHECK(back.two_valued == fam.two_valued);
    }
}

TEST_CASE("event values keep exact rationals") {
    std::stringstream ss;
    ss << "states u v\np 1/3 2/3\nq 0 1\n";
    auto fam = read_events(ss);
    REQUIRE(fam.size() == 2);
    CHECK(fam.events[0].values[0] == Rational(1, 3));
    CHECK(fam.event_name(0) == "p");
    CHECK(fam.index_of_name("q") == 1);
    std::stringstream again;
    write_events(again, fam);
    CHECK(again.str() == "states u v\np 1/3 2/3\nq 0 1\n");
}

TEST_CASE("event parse errors") {
    auto reject = [](const std::string& text) {
        std::stringstream ss(text);
        CHECK_THROWS_AS(read_events(ss), ParseError);
    };
    reject("");
    reject("events u v\np 0 1\n");   // bad header keyword
    reject("states\n");              // no states
    reject("states u v\np 1\n");     // short row
    reject("states u v\np 1 1/0\n"); // zero denominator
    reject("states u v\np 1 x\n");   // non-rational
    reject("states u\np 3/2\n");     // value above 1
    reject("states u u\np 1\n");     // duplicate state labels
}

TEST_CASE("file helpers") {
    const std::string dir = "io_test_tmp";
    std::filesystem::create_directory(dir);
    write_algebra_file(dir + "/alg.txt", specific_rlse_mo(2));
    auto alg = read_algebra_file(dir + "/alg.txt");
    CHECK(std::get<RingLikeAlgebra>(alg) == specific_rlse_mo(2));
    write_events_file(dir + "/ev.txt", concrete_mo2_events());
    CHECK(read_events_file(dir + "/ev.txt").events == concrete_mo2_events().events);
    CHECK_THROWS_AS(read_algebra_file(dir + "/missing.txt"), ParseError);
    std::filesystem::remove_all(dir);
}
