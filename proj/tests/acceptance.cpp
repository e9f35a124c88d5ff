// Acceptance suite: one line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>

#include "embtop/bounds.hpp"
#include "embtop/constructions.hpp"
#include "embtop/linking.hpp"
#include "embtop/linkscan.hpp"
#include "embtop/setsystem.hpp"
#include "support.hpp"

using namespace embtop;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    const char* id;
    const char* label;
    Clock::time_point start = Clock::now();

    void finish(bool ok, const std::string& detail = "") {
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
                .count();
        std::printf("%s %-4s (%5lld ms)  %s%s%s\n", id, ok ? "PASS" : "FAIL",
                    static_cast<long long>(ms), label, detail.empty() ? "" : " -- ",
                    detail.c_str());
        if (!ok) ++failures;
    }
};

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph k33_graph() {
    Graph g(6);
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) g.add_edge(i, j);
    return g;
}

Point3 pt(long x, long y, long z) {
    return Point3{mpq_class(x), mpq_class(y), mpq_class(z)};
}

Chain oriented_cycle(const std::vector<VertexId>& loop) {
    Chain z;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const VertexId a = loop[i];
        const VertexId b = loop[(i + 1) % loop.size()];
        z.add(OrientedSimplex::from_sequence({a, b}), 1);
    }
    return z;
}

void criterion1() {
    Criterion c{"C01", "Eq.(1) link-count identity, 100 random complexes, all k"};
    std::mt19937 rng(20240101);
    bool ok = true;
    const auto t0 = Clock::now();
    for (int iter = 0; iter < 100 && ok; ++iter) {
        const auto K = testing::random_complex(rng, 12, 3);
        for (int k = 1; k <= K.dim(); ++k)
            if (!verify_link_count_identity(K, k).equal) ok = false;
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    c.finish(ok && ms < 5000, "runtime " + std::to_string(ms) + " ms < 5000");
}

void criterion2() {
    Criterion c{"C02", "triple-count identity on 50 random set systems vs brute force"};
    std::mt19937 rng(20240202);
    bool ok = true;
    const auto t0 = Clock::now();
    for (int iter = 0; iter < 50 && ok; ++iter) {
        const int n = 5 + static_cast<int>(rng() % 36);  // <= 40
        const int m = 3 + static_cast<int>(rng() % 10);  // <= 12
        const auto s = generate_random_uniform(n, m, 1, 3, rng());
        if (!verify_triple_identity(s).equal) ok = false;
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    c.finish(ok && ms < 10000, "runtime " + std::to_string(ms) + " ms < 10000");
}

void criterion3() {
    Criterion c{"C03", "Lemma 3 proof chain exact on every admissible generated system"};
    bool ok = true;
    std::vector<std::pair<SetSystem, long long>> suite;
    suite.emplace_back(fano_system(), 1);
    suite.emplace_back(generate_block_repeated(fano_system(), 3), 3);
    suite.emplace_back(SetSystem::of(6, {{0, 1, 2, 3, 4}}), 0);
    suite.emplace_back(SetSystem::of(5, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}), 3);
    std::mt19937 rng(20240303);
    for (int iter = 0; iter < 30; ++iter) {
        auto s = generate_random_uniform(8 + static_cast<int>(rng() % 25),
                                         3 + static_cast<int>(rng() % 9), 1, 3, rng());
        long long f = 0;
        const int m = static_cast<int>(s.sets.size());
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int k = j + 1; k < m; ++k) {
                    std::vector<int> ab, abc;
                    std::set_intersection(s.sets[i].begin(), s.sets[i].end(),
                                          s.sets[j].begin(), s.sets[j].end(),
                                          std::back_inserter(ab));
                    std::set_intersection(ab.begin(), ab.end(), s.sets[k].begin(),
                                          s.sets[k].end(), std::back_inserter(abc));
                    f = std::max(f, static_cast<long long>(abc.size()));
                }
        suite.emplace_back(dual_system(s), 1 + t_of(s));  // duals stay admissible
        suite.emplace_back(std::move(s), f);
    }
    for (const auto& [s, f] : suite) {
        try {
            const auto r = verify_lemma_chain(s, f);
            if (!r.all_hold) ok = false;
        } catch (const std::invalid_argument&) {
            ok = false;  // precondition was supposed to hold
        }
    }
    c.finish(ok);
}

void criterion4() {
    Criterion c{"C04", "scanner positive controls with replayable witnesses"};
    bool ok = true;
    std::string detail;

    const auto check_one = [&](const SimplicialComplex& K, ScanMode mode,
                               const char* name) {
        const auto t0 = Clock::now();
        const auto r = scan(K, mode);
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
                .count();
        if (r.verdict != ScanVerdict::Obstruction || !replay(K, r) || ms >= 5000) {
            ok = false;
            detail += std::string(name) + " failed; ";
        }
    };
    check_one(grunbaum_join({1, 0}), ScanMode::Embed2d, "K5*[3] embed-2d");
    check_one(grunbaum_join({0, 0, 0}), ScanMode::Embed2d, "[3]^3 embed-2d");
    check_one(grunbaum_join({0, 0, 0}), ScanMode::Linkless2dPlus1, "[3]^3 linkless");
    c.finish(ok, detail);
}

void criterion5() {
    Criterion c{"C05", "scanner negative controls produce no false obstruction"};
    bool ok = true;
    if (scan(double_cone(complete(5)), ScanMode::Embed2d).verdict != ScanVerdict::Pass)
        ok = false;
    if (scan(double_cone(k33_graph()), ScanMode::Embed2d).verdict != ScanVerdict::Pass)
        ok = false;
    if (scan(skeleton(staircase_complex(8, 8), 2), ScanMode::Embed3).verdict !=
        ScanVerdict::Pass)
        ok = false;
    c.finish(ok);
}

void criterion6() {
    Criterion c{"C06", "cyclic polytope counts and the n^2-3n bound with equality"};
    bool ok = true;
    for (int n = 6; n <= 12; ++n) {
        const auto K = cyclic_polytope_boundary(n);
        const auto fv = f_vector(K);
        if (fv.f(3) != static_cast<long long>(n) * (n - 3) / 2) ok = false;
        if (fv.f(2) != static_cast<long long>(n) * (n - 3)) ok = false;
        const auto tb = max_triangles_bound_check(skeleton(K, 2));
        if (!tb.within || tb.f2 != tb.bound) ok = false;
    }
    c.finish(ok);
}

void criterion7() {
    Criterion c{"C07", "maximal planar graphs have 3n-6 edges; K5/K33 yield witnesses"};
    bool ok = true;
    for (int n = 5; n <= 50; ++n) {
        const Graph g = maximal_planar(n, 1000u + static_cast<unsigned>(n));
        if (g.m() != 3 * n - 6) ok = false;
        if (!is_planar(g).planar) ok = false;
    }
    const auto r5 = is_planar(complete(5));
    if (r5.planar || !r5.kuratowski || r5.kuratowski->pattern != PatternId::K5 ||
        !validate_witness(complete(5), *r5.kuratowski))
        ok = false;
    const auto r33 = is_planar(k33_graph());
    if (r33.planar || !r33.kuratowski || r33.kuratowski->pattern != PatternId::K33 ||
        !validate_witness(k33_graph(), *r33.kuratowski))
        ok = false;
    c.finish(ok);
}

void criterion8() {
    Criterion c{"C08", "Petersen family fails linklessness; 20 random apex graphs pass"};
    bool ok = true;
    const auto t0 = Clock::now();
    for (PatternId id : petersen_family_ids()) {
        const Graph& g = pattern_graph(id);
        const auto r = linkless_necessary(g);
        if (r.pass || !r.witness || r.pattern != id ||
            !validate_witness(g, *r.witness))
            ok = false;
    }
    std::mt19937 rng(20240808);
    for (int i = 0; i < 20; ++i) {
        const int n = 5 + static_cast<int>(rng() % 8);  // planar part <= 12 vertices
        const Graph apex = apex_graph(maximal_planar(n, 500u + static_cast<unsigned>(i)));
        const auto r = linkless_necessary(apex);
        if (!r.pass) ok = false;
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    c.finish(ok && ms < 30000, "runtime " + std::to_string(ms) + " ms < 30000");
}

void criterion9() {
    Criterion c{"C09", "linking numbers exact: Hopf 1, split 0, doubled 2, Formula (2)"};
    bool ok = true;
    std::string detail;

    // Hopf pair
    {
        PointMap coords{{0, pt(2, 2, 0)},  {1, pt(-2, 2, 0)}, {2, pt(-2, -2, 0)},
                        {3, pt(2, -2, 0)}, {4, pt(1, 0, 1)},  {5, pt(1, 0, -1)},
                        {6, pt(3, 0, -1)}, {7, pt(3, 0, 1)}};
        std::vector<Simplex> facets{Simplex::of({0, 1}), Simplex::of({1, 2}),
                                    Simplex::of({2, 3}), Simplex::of({0, 3}),
                                    Simplex::of({4, 5}), Simplex::of({5, 6}),
                                    Simplex::of({6, 7}), Simplex::of({4, 7})};
        const auto curves = EmbeddedCurves::of(closure(std::move(facets)), std::move(coords));
        const Chain zA = oriented_cycle({0, 1, 2, 3});
        const Chain zB = oriented_cycle({4, 5, 6, 7});
        const auto base = linking_number(curves, zA, zB);
        if (std::labs(base.value) != 1) {
            ok = false;
            detail += "hopf != 1; ";
        }
        int checked = 0;
        for (int k = 0; k < 40 && checked < 10; ++k) {
            LinkingOptions opt;
            opt.apex = perturbation_apex(k);
            try {
                if (linking_number(curves, zA, zB, opt).value != base.value) {
                    ok = false;
                    detail += "apex dependence; ";
                }
                ++checked;
            } catch (const degenerate_error&) {
                continue;
            }
        }
        if (checked < 10) ok = false;
    }

    // split pair
    {
        PointMap coords{{0, pt(2, 2, 0)},   {1, pt(-2, 2, 0)},  {2, pt(-2, -2, 0)},
                        {3, pt(2, -2, 0)},  {4, pt(10, 0, 1)},  {5, pt(10, 0, -1)},
                        {6, pt(12, 0, -1)}, {7, pt(12, 0, 1)}};
        std::vector<Simplex> facets{Simplex::of({0, 1}), Simplex::of({1, 2}),
                                    Simplex::of({2, 3}), Simplex::of({0, 3}),
                                    Simplex::of({4, 5}), Simplex::of({5, 6}),
                                    Simplex::of({6, 7}), Simplex::of({4, 7})};
        const auto curves = EmbeddedCurves::of(closure(std::move(facets)), std::move(coords));
        int checked = 0;
        for (int k = 0; k < 40 && checked < 10; ++k) {
            LinkingOptions opt;
            opt.apex = perturbation_apex(k);
            try {
                if (linking_number(curves, oriented_cycle({0, 1, 2, 3}),
                                   oriented_cycle({4, 5, 6, 7}), opt)
                        .value != 0) {
                    ok = false;
                    detail += "split != 0; ";
                }
                ++checked;
            } catch (const degenerate_error&) {
                continue;
            }
        }
        if (checked < 10) ok = false;
    }

    // doubled threading, the (1,2) torus pattern around the square
    {
        PointMap coords{{0, pt(2, 2, 0)},   {1, pt(-2, 2, 0)}, {2, pt(-2, -2, 0)},
                        {3, pt(2, -2, 0)},  {4, pt(3, 0, 0)},  {5, pt(2, 2, 1)},
                        {6, pt(0, 1, 0)},   {7, pt(-2, 2, -1)},{8, pt(-3, 0, 0)},
                        {9, pt(-2, -2, 1)}, {10, pt(0, -1, 0)},{11, pt(2, -2, -1)}};
        std::vector<Simplex> facets{Simplex::of({0, 1}),   Simplex::of({1, 2}),
                                    Simplex::of({2, 3}),   Simplex::of({0, 3}),
                                    Simplex::of({4, 5}),   Simplex::of({5, 6}),
                                    Simplex::of({6, 7}),   Simplex::of({7, 8}),
                                    Simplex::of({8, 9}),   Simplex::of({9, 10}),
                                    Simplex::of({10, 11}), Simplex::of({4, 11})};
        const auto curves = EmbeddedCurves::of(closure(std::move(facets)), std::move(coords));
        const Chain zA = oriented_cycle({0, 1, 2, 3});
        const Chain zB = oriented_cycle({4, 5, 6, 7, 8, 9, 10, 11});
        const auto base = linking_number(curves, zA, zB);
        if (std::labs(base.value) != 2) {
            ok = false;
            detail += "doubled != 2; ";
        }
        int checked = 0;
        for (int k = 0; k < 40 && checked < 10; ++k) {
            LinkingOptions opt;
            opt.apex = perturbation_apex(k);
            try {
                if (linking_number(curves, zA, zB, opt).value != base.value) ok = false;
                ++checked;
            } catch (const degenerate_error&) {
                continue;
            }
        }
        if (checked < 10) ok = false;
    }

    // Formula (2) with p = 1 on 25 random transverse instances
    {
        std::mt19937 rng(20240909);
        std::uniform_int_distribution<long> coord(-6, 6);
        std::uniform_int_distribution<int> coef(-2, 2);
        int done = 0;
        long guard = 0;
        while (done < 25 && ++guard < 100000) {
            PointMap cs;
            cs[0] = pt(coord(rng), coord(rng), coord(rng));
            cs[1] = pt(coord(rng), coord(rng), coord(rng));
            if (cs[0] == cs[1]) continue;
            const int n1 = coef(rng);
            if (n1 == 0) continue;
            Chain c1;
            c1.add(Simplex::of({0, 1}), n1);
            PointMap ct;
            for (VertexId v = 0; v < 4; ++v)
                ct[v] = pt(coord(rng), coord(rng), coord(rng));
            const int m1 = coef(rng);
            if (m1 == 0) continue;
            Chain c3;
            c3.add(Simplex::of({0, 1, 2, 3}), m1);
            try {
                if (!verify_boundary_identity(c1, cs, c3, ct).equal) {
                    ok = false;
                    detail += "formula-2 mismatch; ";
                }
                ++done;
            } catch (const degenerate_error&) {
                continue;
            } catch (const std::invalid_argument&) {
                continue;
            }
        }
        if (done < 25) ok = false;
    }
    c.finish(ok, detail);
}

void criterion10() {
    Criterion c{"C10", "exact exponents e(1)=1, e(2)=8/3, e(3)=35/9; dual involution"};
    bool ok = bound_exponent(1) == mpq_class(1) && bound_exponent(2) == mpq_class(8, 3) &&
              bound_exponent(3) == mpq_class(35, 9);
    std::mt19937 rng(20241010);
    for (int iter = 0; iter < 50; ++iter) {
        const auto s = generate_random_uniform(6 + static_cast<int>(rng() % 20),
                                               2 + static_cast<int>(rng() % 8), 1, 2,
                                               rng());
        if (t_of(dual_system(s)) != t_of(s)) ok = false;
    }
    c.finish(ok);
}

void criterion11() {
    Criterion c{"C11", "tightness construction: apex links match the sets, f2 = t(S)"};
    bool ok = true;
    std::mt19937 rng(20241111);
    for (int iter = 0; iter < 20; ++iter) {
        const int f0 = 2 + static_cast<int>(rng() % 2);
        const int ground = f0 * (2 * f0 - 1);
        const auto s = generate_random_uniform(ground, 2 + static_cast<int>(rng() % 4),
                                               1, 2, rng());
        const auto t = build_tightness_complex(s);
        if (f_vector(t.complex).f(2) != t_of(s)) ok = false;
        for (std::size_t i = 0; i < s.sets.size(); ++i) {
            const auto L = link(t.complex, t.apexes[i]);
            std::set<std::pair<VertexId, VertexId>> expect;
            for (int e : s.sets[i]) expect.insert(t.edge_of[e]);
            std::set<std::pair<VertexId, VertexId>> got;
            for (const auto& f : L.faces_of_dim(1)) got.insert({f[0], f[1]});
            if (got != expect) ok = false;
        }
    }
    c.finish(ok);
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    if (failures == 0) {
        std::printf("all 11 criteria PASS\n");
        return 0;
    }
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
}
