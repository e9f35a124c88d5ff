#include "embtop/linkscan.hpp"

#include <chrono>
#include <stdexcept>

namespace embtop {

namespace {

using Clock = std::chrono::steady_clock;

std::string pattern_terminal_name(PatternId id) {
    switch (id) {
        case PatternId::K5: return "K5-subdivision";
        case PatternId::K33: return "K33-subdivision";
        default: return pattern_name(id) + "-subdivision";
    }
}

struct Scanner {
    ScanMode mode;
    int top_dim;
    SearchBudget budget;
    ObstructionReport report;
    bool saw_inconclusive = false;

    // Applies the graph-level test for the current mode. `strong` selects the
    // full planarity test (top-level 2-complex in Embed2d mode); otherwise
    // Embed2d looks for a K5 subdivision and Linkless2dPlus1 for a K33
    // subdivision.
    bool graph_test(const Graph& g, bool strong) {
        report.stats.graph_tests += 1;
        if (mode == ScanMode::Embed3 || strong) {
            PlanarityResult pr = is_planar(g);
            if (pr.planar) return false;
            report.terminal_pattern = pattern_terminal_name(pr.kuratowski->pattern);
            report.terminal_witness = std::move(pr.kuratowski);
            return true;
        }
        const PatternId pat =
            mode == ScanMode::Embed2d ? PatternId::K5 : PatternId::K33;
        SearchResult r = has_subdivision(g, pat, budget);
        report.stats.budget_nodes += r.nodes_used;
        if (r.outcome == SearchOutcome::Inconclusive) {
            saw_inconclusive = true;
            return false;
        }
        if (r.outcome == SearchOutcome::Absent) return false;
        report.terminal_pattern = pattern_terminal_name(pat);
        report.terminal_witness = std::move(r.witness);
        if (mode == ScanMode::Linkless2dPlus1) {
            SearchResult screen = has_subdivision(g, PatternId::K6, budget);
            report.stats.budget_nodes += screen.nodes_used;
            report.k6_screen = screen.outcome == SearchOutcome::Found;
        }
        return true;
    }

    // Recursive descent over triple link intersections. `levels_left` is the
    // number of descents still to perform; at 1 the intersections are graphs
    // and get the terminal test. A complex of dimension <= levels_left can
    // only bottom out in edgeless graphs, so the branch passes vacuously.
    bool descend(const SimplicialComplex& C, int levels_left, int depth,
                 std::vector<WitnessLevel>& chain) {
        if (C.dim() <= levels_left) return false;
        report.stats.max_depth = std::max(report.stats.max_depth, depth);

        std::map<VertexId, SimplicialComplex> links;
        for (VertexId v : C.vertices()) {
            links.emplace(v, link(C, v));
            report.stats.links_computed += 1;
        }
        const auto& verts = C.vertices();
        const int nv = static_cast<int>(verts.size());
        std::map<std::pair<int, int>, bool> pair_nonempty;
        auto pair_ok = [&](int a, int b) {
            auto key = std::make_pair(a, b);
            auto it = pair_nonempty.find(key);
            if (it != pair_nonempty.end()) return it->second;
            bool ok = !intersection(links.at(verts[a]), links.at(verts[b])).empty();
            pair_nonempty.emplace(key, ok);
            return ok;
        };

        for (int a = 0; a < nv; ++a)
            for (int b = a + 1; b < nv; ++b) {
                if (!pair_ok(a, b)) continue;
                for (int c = b + 1; c < nv; ++c) {
                    if (!pair_ok(a, c) || !pair_ok(b, c)) continue;
                    report.stats.triples_scanned += 1;
                    SimplicialComplex L = intersection(
                        intersection(links.at(verts[a]), links.at(verts[b])),
                        links.at(verts[c]));
                    if (L.empty()) continue;
                    report.stats.nonempty_intersections += 1;
                    report.stats.max_intersection_facets =
                        std::max(report.stats.max_intersection_facets,
                                 static_cast<long long>(L.facets().size()));
                    auto [compact, relabel] = compact_relabel(L);
                    WitnessLevel level{{verts[a], verts[b], verts[c]}, relabel};
                    chain.push_back(level);
                    bool hit;
                    if (levels_left == 1) {
                        const bool strong =
                            mode == ScanMode::Embed2d && depth == 1 && top_dim == 2;
                        hit = compact.dim() >= 1 &&
                              graph_test(Graph::from_complex(compact), strong);
                        if (hit) report.stats.max_depth =
                            std::max(report.stats.max_depth, depth + 1);
                    } else {
                        hit = descend(compact, levels_left - 1, depth + 1, chain);
                    }
                    if (hit) return true;
                    chain.pop_back();
                }
            }
        return false;
    }
};

}  // namespace

std::string scan_mode_name(ScanMode mode) {
    switch (mode) {
        case ScanMode::Embed2d: return "embed-2d";
        case ScanMode::Linkless2dPlus1: return "linkless-2d+1";
        case ScanMode::Embed3: return "embed-3";
    }
    return "?";
}

ScanMode scan_mode_from_name(const std::string& name) {
    if (name == "embed-2d") return ScanMode::Embed2d;
    if (name == "linkless-2d+1") return ScanMode::Linkless2dPlus1;
    if (name == "embed-3") return ScanMode::Embed3;
    throw std::invalid_argument("unknown scan mode: " + name);
}

std::string scan_verdict_name(ScanVerdict v) {
    switch (v) {
        case ScanVerdict::Pass: return "pass";
        case ScanVerdict::Obstruction: return "obstruction";
        case ScanVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

SimplicialComplex triple_link_intersection(const SimplicialComplex& K, VertexId u,
                                           VertexId v, VertexId w) {
    if (u == v || u == w || v == w)
        throw std::invalid_argument("triple link intersection: vertices not distinct");
    return intersection(intersection(link(K, u), link(K, v)), link(K, w));
}

std::pair<SimplicialComplex, std::vector<std::pair<VertexId, VertexId>>>
compact_relabel(const SimplicialComplex& K) {
    std::vector<std::pair<VertexId, VertexId>> map;
    std::map<VertexId, VertexId> to_new;
    VertexId next = 0;
    for (VertexId v : K.vertices()) {
        to_new[v] = next;
        map.emplace_back(v, next);
        ++next;
    }
    std::vector<Simplex> facets;
    for (const auto& f : K.facets()) {
        std::vector<VertexId> vs;
        for (VertexId v : f.vertices()) vs.push_back(to_new.at(v));
        facets.push_back(Simplex::from_sorted(std::move(vs)));
    }
    return {SimplicialComplex::from_faces(std::move(facets)), std::move(map)};
}

ObstructionReport scan(const SimplicialComplex& K, ScanMode mode,
                       const SearchBudget& budget) {
    const auto t0 = Clock::now();
    Scanner scanner{mode, K.dim(), budget, {}, false};
    scanner.report.mode = mode;
    bool obstruction = false;

    if (mode == ScanMode::Embed3) {
        if (K.dim() != 2)
            throw std::invalid_argument("embed-3 scan requires a 2-complex");
        for (VertexId v : K.vertices()) {
            SimplicialComplex L = link(K, v);
            scanner.report.stats.links_computed += 1;
            scanner.report.stats.max_depth = std::max(scanner.report.stats.max_depth, 1);
            if (L.empty()) continue;
            auto [compact, relabel] = compact_relabel(L);
            if (compact.dim() < 1) continue;
            if (scanner.graph_test(Graph::from_complex(compact), true)) {
                scanner.report.witness_chain.push_back(WitnessLevel{{v}, relabel});
                obstruction = true;
                break;
            }
        }
    } else {
        const int d = K.dim();
        if (d < 0) throw std::invalid_argument("scan: empty complex");
        if (d == 0) {
            // a cloud of points embeds anywhere; nothing to test
        } else if (d == 1) {
            scanner.report.stats.max_depth = 1;
            obstruction = scanner.graph_test(
                Graph::from_complex(K), mode == ScanMode::Embed2d);
        } else {
            obstruction = scanner.descend(K, d - 1, 1, scanner.report.witness_chain);
        }
    }

    if (obstruction)
        scanner.report.verdict = ScanVerdict::Obstruction;
    else if (scanner.saw_inconclusive)
        scanner.report.verdict = ScanVerdict::Inconclusive;
    else
        scanner.report.verdict = ScanVerdict::Pass;
    scanner.report.stats.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return scanner.report;
}

bool replay(const SimplicialComplex& K, const ObstructionReport& report) {
    if (report.verdict != ScanVerdict::Obstruction) return false;
    if (!report.terminal_witness) return false;
    SimplicialComplex C = K;
    for (const auto& level : report.witness_chain) {
        SimplicialComplex L;
        if (level.vertices.size() == 1) {
            L = link(C, level.vertices[0]);
        } else if (level.vertices.size() == 3) {
            L = triple_link_intersection(C, level.vertices[0], level.vertices[1],
                                         level.vertices[2]);
        } else {
            return false;
        }
        auto [compact, relabel] = compact_relabel(L);
        if (relabel != level.relabeling) return false;
        C = std::move(compact);
    }
    if (C.dim() < 1) return false;
    Graph g = Graph::from_complex(C);
    const MinorWitness& w = *report.terminal_witness;
    if (!w.subdivision) return false;
    return validate_witness(g, w);
}

TriangleBound max_triangles_bound_check(const SimplicialComplex& K) {
    if (K.dim() < 2)
        throw std::invalid_argument("triangle bound: complex has dimension < 2");
    TriangleBound out;
    const FVector fv = f_vector(K);
    out.f2 = fv.f(2);
    const long long n = fv.f(0);
    out.bound = n * n - 3 * n;
    out.within = out.f2 <= out.bound;
    return out;
}

}  // namespace embtop
