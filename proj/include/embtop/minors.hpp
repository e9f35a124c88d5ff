#pragma once

#include <optional>

#include "embtop/graph.hpp"

namespace embtop {

/// Search budget counted in explored nodes, not wall-clock time, so that
/// reruns are bit-identical. The default is sized to keep a single
/// graph-level search around ten seconds on commodity hardware.
struct SearchBudget {
    long long node_limit = 50'000'000;
};

enum class SearchOutcome { Found, Absent, Inconclusive };

/// Certificate for a subdivision or minor occurrence. For subdivisions,
/// `branch_vertex[i]` hosts pattern vertex i and `paths[k]` realizes the k-th
/// pattern edge (order of pattern_graph(id).edges()), endpoints included.
/// For minors, `branch_sets[i]` is the connected host set of pattern vertex i.
struct MinorWitness {
    PatternId pattern;
    bool subdivision = false;
    std::vector<int> branch_vertex;
    std::vector<std::vector<int>> paths;
    std::vector<std::vector<int>> branch_sets;
};

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::Absent;
    std::optional<MinorWitness> witness;
    long long nodes_used = 0;
};

/// Exhaustive search for a subgraph homeomorphic to the pattern.
/// Never wrong: exceeding the budget yields Inconclusive, not a guess.
SearchResult has_subdivision(const Graph& host, PatternId pattern,
                             const SearchBudget& budget = {});

/// Exhaustive branch-set search for the pattern as a minor.
SearchResult has_minor(const Graph& host, PatternId pattern,
                       const SearchBudget& budget = {});

struct LinklessCheck {
    SearchOutcome outcome = SearchOutcome::Absent;  // Found = some minor present
    bool pass = false;                              // true iff no family minor
    std::optional<PatternId> pattern;
    std::optional<MinorWitness> witness;
    long long nodes_used = 0;
};

/// Necessary condition for linkless embeddability in R^3: none of the seven
/// Petersen-family graphs occurs as a minor. Failing certifies the graph is
/// not linklessly embeddable; passing certifies nothing beyond the condition.
LinklessCheck linkless_necessary(const Graph& g, const SearchBudget& budget = {});

bool validate_witness(const Graph& host, const MinorWitness& w);

}  // namespace embtop
