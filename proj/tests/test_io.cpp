#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "embtop/io.hpp"

using namespace embtop;

TEST_CASE("scx round trip") {
    std::istringstream in("# triangle plus edge\n1 2 3\n3 4\n");
    const auto K = read_scx(in);
    CHECK(K.dim() == 2);
    CHECK(K.facets().size() == 2);

    std::ostringstream out;
    write_scx(out, K, "round trip");
    std::istringstream back(out.str());
    CHECK(read_scx(back) == K);
}

TEST_CASE("scx rejects bad input") {
    std::istringstream dup("1 2 2\n");
    CHECK_THROWS_AS(read_scx(dup), parse_error);

    std::istringstream empty("# nothing here\n\n");
    CHECK_THROWS_WITH_AS(read_scx(empty), "line 2: empty complex", parse_error);

    std::istringstream neg("1 -2\n");
    CHECK_THROWS_AS(read_scx(neg), parse_error);

    std::istringstream junk("1 x\n");
    try {
        read_scx(junk);
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 1);
    }
}

TEST_CASE("scx absorbs non-maximal lines") {
    std::istringstream in("1 2 3\n1 2\n");
    const auto K = read_scx(in);
    CHECK(K.facets().size() == 1);
}

TEST_CASE("geom parsing and cycles") {
    std::istringstream in(
        "# a unit-square loop\n"
        "v 0 0 0 0\n"
        "v 1 1 0 0\n"
        "v 2 1 1 0\n"
        "v 3 0 1 0\n"
        "e 0 1\ne 1 2\ne 2 3\ne 3 0\n");
    const auto g = read_geom(in);
    CHECK(g.edge_order.size() == 4);
    CHECK(g.curves.complex.dim() == 1);
    CHECK(g.curves.coords.at(2).x == 1);

    const Chain z = cycle_from_edge_list(g, "1,2,3,4");
    CHECK(is_cycle(z));
    const Chain znot = cycle_from_edge_list(g, "1,2");
    CHECK_FALSE(is_cycle(znot));
    // reversed edges cancel
    const Chain zero = cycle_from_edge_list(g, "1,-1");
    CHECK(zero.is_zero());
    CHECK_THROWS_AS(cycle_from_edge_list(g, "9"), std::invalid_argument);
    CHECK_THROWS_AS(cycle_from_edge_list(g, "0"), std::invalid_argument);
}

TEST_CASE("geom accepts rational coordinates and validates references") {
    std::istringstream in("v 0 1/2 -3/4 2\nv 1 0 0 1\ne 0 1\n");
    const auto g = read_geom(in);
    CHECK(g.curves.coords.at(0).x == mpq_class(1, 2));
    CHECK(g.curves.coords.at(0).y == mpq_class(-3, 4));

    std::istringstream bad("v 0 0 0 0\ne 0 1\n");
    CHECK_THROWS_AS(read_geom(bad), parse_error);

    std::istringstream dup("v 0 0 0 0\nv 0 1 1 1\n");
    CHECK_THROWS_AS(read_geom(dup), parse_error);
}

TEST_CASE("geom rejects broken embeddings") {
    // two disjoint edges crossing at the origin
    std::istringstream in(
        "v 0 -1 0 0\nv 1 1 0 0\nv 2 0 -1 0\nv 3 0 1 0\n"
        "e 0 1\ne 2 3\n");
    CHECK_THROWS_AS(read_geom(in), std::invalid_argument);

    // vertex in the interior of an edge
    std::istringstream in2("v 0 0 0 0\nv 1 2 0 0\nv 2 1 0 0\ne 0 1\n");
    CHECK_THROWS_AS(read_geom(in2), std::invalid_argument);

    // collinear overlapping edges sharing a vertex
    std::istringstream in3("v 0 0 0 0\nv 1 2 0 0\nv 2 1 0 0\ne 0 1\ne 0 2\n");
    CHECK_THROWS_AS(read_geom(in3), std::invalid_argument);
}

TEST_CASE("set system parsing") {
    std::istringstream in("# fano-ish\n7 3\n0 1 2\n\n2 4 5\n");
    const auto s = read_setsystem(in);
    CHECK(s.ground == 7);
    REQUIRE(s.sets.size() == 3);
    CHECK(s.sets[0] == std::vector<int>{0, 1, 2});
    CHECK(s.sets[1].empty());
    CHECK(s.sets[2] == std::vector<int>{2, 4, 5});

    std::ostringstream out;
    write_setsystem(out, s);
    std::istringstream back(out.str());
    const auto s2 = read_setsystem(back);
    CHECK(s2.sets == s.sets);
    CHECK(s2.ground == s.ground);
}

TEST_CASE("set system rejects bad input") {
    std::istringstream range("3 1\n0 5\n");
    CHECK_THROWS_AS(read_setsystem(range), parse_error);
    std::istringstream missing("3 2\n0\n");
    CHECK_THROWS_AS(read_setsystem(missing), parse_error);
    std::istringstream extra("3 1\n0\n1\n");
    CHECK_THROWS_AS(read_setsystem(extra), parse_error);
}
