#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "embtop/constructions.hpp"
#include "embtop/minors.hpp"
#include "embtop/planarity.hpp"

using namespace embtop;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph grid(int rows, int cols) {
    Graph g(rows * cols);
    auto at = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(at(r, c), at(r, c + 1));
            if (r + 1 < rows) g.add_edge(at(r, c), at(r + 1, c));
        }
    return g;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("petersen family data matches the delta-Y closure of K6") {
    const auto family = petersen_family();
    REQUIRE(family.size() == 7);
    const auto derived = delta_y_family_of_k6();
    REQUIRE(derived.size() == 7);
    for (const auto& f : family) {
        int hits = 0;
        for (const auto& d : derived)
            if (isomorphic(f, d)) ++hits;
        CHECK(hits == 1);
    }
    // the named members
    CHECK(isomorphic(family[0], complete(6)));
    const Graph& petersen = pattern_graph(PatternId::PF_PETERSEN);
    CHECK(petersen.n() == 10);
    CHECK(petersen.m() == 15);
    for (int v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);
}

TEST_CASE("planarity decisions") {
    CHECK(is_planar(complete(4)).planar);
    CHECK(is_planar(grid(4, 4)).planar);
    CHECK_FALSE(is_planar(complete(5)).planar);
    CHECK_FALSE(is_planar(pattern_graph(PatternId::K33)).planar);
    CHECK_FALSE(is_planar(pattern_graph(PatternId::PF_PETERSEN)).planar);
}

TEST_CASE("kuratowski witnesses validate") {
    auto r5 = is_planar(complete(5));
    REQUIRE(r5.kuratowski.has_value());
    CHECK(r5.kuratowski->pattern == PatternId::K5);
    CHECK(validate_witness(complete(5), *r5.kuratowski));

    const Graph k33 = pattern_graph(PatternId::K33);
    auto r33 = is_planar(k33);
    REQUIRE(r33.kuratowski.has_value());
    CHECK(r33.kuratowski->pattern == PatternId::K33);
    CHECK(validate_witness(k33, *r33.kuratowski));

    // a subdivided K5: split each edge of K5 once
    Graph sub(5 + 10);
    int next = 5;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            sub.add_edge(i, next);
            sub.add_edge(next, j);
            ++next;
        }
    auto rs = is_planar(sub);
    REQUIRE(rs.kuratowski.has_value());
    CHECK(rs.kuratowski->pattern == PatternId::K5);
    CHECK(validate_witness(sub, *rs.kuratowski));
}

TEST_CASE("maximal planar stock") {
    for (int n : {5, 10, 23}) {
        const Graph g = maximal_planar(n, 42);
        CHECK(g.m() == 3 * n - 6);
        CHECK(is_planar(g).planar);
    }
}

TEST_CASE("subdivision search on fixed hosts") {
    CHECK(has_subdivision(complete(6), PatternId::K6).outcome == SearchOutcome::Found);
    CHECK(has_subdivision(complete(7), PatternId::K6).outcome == SearchOutcome::Found);
    // Petersen graph is 3-regular: no K5 subdivision (needs five degree-4 vertices)
    CHECK(has_subdivision(pattern_graph(PatternId::PF_PETERSEN), PatternId::K5).outcome ==
          SearchOutcome::Absent);
    // but it does contain a K33 subdivision
    const auto r = has_subdivision(pattern_graph(PatternId::PF_PETERSEN), PatternId::K33);
    REQUIRE(r.outcome == SearchOutcome::Found);
    CHECK(validate_witness(pattern_graph(PatternId::PF_PETERSEN), *r.witness));
    CHECK(r.witness->subdivision);
}

TEST_CASE("minor search on fixed hosts") {
    // contracting a perfect matching of the Petersen graph yields K5
    const auto rp = has_minor(pattern_graph(PatternId::PF_PETERSEN), PatternId::K5);
    REQUIRE(rp.outcome == SearchOutcome::Found);
    CHECK(validate_witness(pattern_graph(PatternId::PF_PETERSEN), *rp.witness));

    CHECK(has_minor(grid(4, 4), PatternId::K5).outcome == SearchOutcome::Absent);
    CHECK(has_minor(complete(6), PatternId::K6).outcome == SearchOutcome::Found);
}

TEST_CASE("budget exhaustion is reported, never guessed") {
    SearchBudget tiny{5};
    const auto r = has_minor(grid(4, 4), PatternId::K6, tiny);
    CHECK(r.outcome == SearchOutcome::Inconclusive);
    const auto r2 = has_subdivision(complete(8), PatternId::K6, tiny);
    CHECK(r2.outcome == SearchOutcome::Inconclusive);
}

TEST_CASE("planarity agrees with forbidden subdivisions on small hosts") {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 40; ++iter) {
        const Graph g = random_graph(rng, 5 + static_cast<int>(rng() % 5), 0.5);
        const bool planar = is_planar(g).planar;
        const bool k5 = has_subdivision(g, PatternId::K5).outcome == SearchOutcome::Found;
        const bool k33 = has_subdivision(g, PatternId::K33).outcome == SearchOutcome::Found;
        CHECK(planar == (!k5 && !k33));
    }
}

TEST_CASE("monotonicity: adding edges preserves found minors") {
    std::mt19937 rng(17);
    for (int iter = 0; iter < 10; ++iter) {
        Graph g = random_graph(rng, 8, 0.45);
        const bool before = has_minor(g, PatternId::K5).outcome == SearchOutcome::Found;
        if (!before) continue;
        for (int extra = 0; extra < 3; ++extra) {
            int u = static_cast<int>(rng() % 8), v = static_cast<int>(rng() % 8);
            if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
        }
        CHECK(has_minor(g, PatternId::K5).outcome == SearchOutcome::Found);
    }
}

TEST_CASE("petersen family is a minor antichain") {
    const auto& ids = petersen_family_ids();
    for (PatternId a : ids)
        for (PatternId b : ids) {
            const auto r = has_minor(pattern_graph(a), b);
            REQUIRE(r.outcome != SearchOutcome::Inconclusive);
            CHECK((r.outcome == SearchOutcome::Found) == (a == b));
        }
}

TEST_CASE("linkless necessary condition") {
    const auto k6 = linkless_necessary(complete(6));
    CHECK_FALSE(k6.pass);
    REQUIRE(k6.witness.has_value());
    CHECK(k6.pattern == PatternId::K6);
    CHECK(validate_witness(complete(6), *k6.witness));

    CHECK(linkless_necessary(grid(3, 3)).pass);
    CHECK(linkless_necessary(maximal_planar(9, 5)).pass);

    const Graph apex = apex_graph(maximal_planar(10, 7));
    CHECK(linkless_necessary(apex).pass);
}

TEST_CASE("edge bounds") {
    const Graph mp = maximal_planar(10, 3);
    const auto pb = edge_bound_check(mp, EdgeBoundRegime::Planar);
    CHECK(pb.edges == 24);
    CHECK(pb.bound == 24);
    CHECK(pb.within);

    const auto k6b = edge_bound_check(complete(6), EdgeBoundRegime::NoK6Subdivision);
    CHECK(k6b.edges == 15);
    CHECK(k6b.bound == 24);
    CHECK(k6b.within);

    const Graph apex = apex_graph(maximal_planar(10, 11));
    const auto ab = edge_bound_check(apex, EdgeBoundRegime::NoK6Subdivision);
    CHECK(ab.edges == 34);
    CHECK(ab.bound == 44);
    CHECK(ab.within);

    CHECK_THROWS_AS(edge_bound_check(Graph(2), EdgeBoundRegime::Planar),
                    std::invalid_argument);
}

TEST_CASE("witness validation rejects corrupted certificates") {
    auto r = has_minor(pattern_graph(PatternId::PF_PETERSEN), PatternId::K5);
    REQUIRE(r.outcome == SearchOutcome::Found);
    MinorWitness w = *r.witness;
    REQUIRE(validate_witness(pattern_graph(PatternId::PF_PETERSEN), w));
    w.branch_sets[0].clear();
    CHECK_FALSE(validate_witness(pattern_graph(PatternId::PF_PETERSEN), w));
}
