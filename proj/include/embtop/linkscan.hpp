#pragma once

#include <string>

#include "embtop/complex.hpp"
#include "embtop/minors.hpp"
#include "embtop/planarity.hpp"

namespace embtop {

/// What the scan certifies against.
///   Embed2d:        d-complex in R^{2d}. Necessary conditions only; for a
///                   2-complex the triple link intersections must be planar,
///                   deeper levels descend to a K5-subdivision test.
///   Linkless2dPlus1: d-complex linklessly embeddable in R^{2d+1}; the base
///                   graph test is a K33 subdivision.
///   Embed3:         2-complex in R^3; every single vertex link must be planar.
enum class ScanMode { Embed2d, Linkless2dPlus1, Embed3 };

enum class ScanVerdict { Pass, Obstruction, Inconclusive };

/// One descent level of a witness chain. `vertices` is the triple whose link
/// intersection was taken (a single vertex for Embed3), in the labels of the
/// complex at that level; `relabeling` maps those labels to the compact
/// universe the next level works in.
struct WitnessLevel {
    std::vector<VertexId> vertices;
    std::vector<std::pair<VertexId, VertexId>> relabeling;
};

struct ScanStatistics {
    long long triples_scanned = 0;
    long long nonempty_intersections = 0;
    long long max_intersection_facets = 0;
    long long links_computed = 0;
    long long graph_tests = 0;
    long long budget_nodes = 0;
    int max_depth = 0;
    long long elapsed_ms = 0;
};

struct ObstructionReport {
    ScanMode mode;
    ScanVerdict verdict = ScanVerdict::Pass;
    std::vector<WitnessLevel> witness_chain;
    std::string terminal_pattern;  // "K5-subdivision" / "K33-subdivision"; empty on pass
    std::optional<MinorWitness> terminal_witness;
    bool k6_screen = false;  // linkless mode: obstruction graph also carries a K6 subdivision
    ScanStatistics stats;
};

std::string scan_mode_name(ScanMode mode);
ScanMode scan_mode_from_name(const std::string& name);
std::string scan_verdict_name(ScanVerdict v);

/// Intersection of the link-complexes of three distinct vertices.
SimplicialComplex triple_link_intersection(const SimplicialComplex& K, VertexId u,
                                           VertexId v, VertexId w);

/// Relabels a complex onto the compact universe 0..k-1 (sorted original
/// labels in order); returns the old->new map.
std::pair<SimplicialComplex, std::vector<std::pair<VertexId, VertexId>>>
compact_relabel(const SimplicialComplex& K);

/// Runs the recursive necessary-condition scan. A Pass verdict means
/// "no obstruction found (necessary conditions hold)", never "embeddable".
ObstructionReport scan(const SimplicialComplex& K, ScanMode mode,
                       const SearchBudget& budget = {});

/// Re-derives the obstruction from the recorded witness chain: takes the
/// recorded link intersections level by level and re-validates the terminal
/// witness on the final graph.
bool replay(const SimplicialComplex& K, const ObstructionReport& report);

struct TriangleBound {
    long long f2 = 0;
    long long bound = 0;
    bool within = false;
};

/// f_2 against the n^2 - 3n cap satisfied by 2-complexes embeddable in R^3.
/// The bound goes negative on tiny inputs; that is reported, not an error.
TriangleBound max_triangles_bound_check(const SimplicialComplex& K);

}  // namespace embtop
