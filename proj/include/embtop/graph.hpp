#pragma once

#include <set>
#include <string>
#include <vector>

#include "embtop/complex.hpp"

namespace embtop {

/// Simple undirected graph over compact indices 0..n-1, remembering the
/// original vertex labels when it came from a complex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Derives the graph of a complex of dimension <= 1 (edges plus isolated
    /// vertices). Throws if the complex has higher-dimensional faces.
    static Graph from_complex(const SimplicialComplex& K);

    /// Builds from an explicit edge list on vertices 0..n-1.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }
    const std::set<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const { return adj_[u].count(v) > 0; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::vector<std::pair<int, int>> edges() const;

    /// Original label of compact vertex i (identity when built from edges).
    VertexId label(int i) const { return labels_[i]; }
    const std::vector<VertexId>& labels() const { return labels_; }

    /// True if `sub`'s vertex set is connected in this graph.
    bool connected_subset(const std::vector<int>& sub) const;

private:
    std::vector<std::set<int>> adj_;
    std::vector<VertexId> labels_;
    int m_ = 0;
};

/// The fixed forbidden patterns used by the decision procedures.
enum class PatternId {
    K5,
    K33,
    K6,
    PF_G7,         // K6 after one delta-Y transform (7 vertices)
    PF_K331,       // complete tripartite K_{3,3,1}
    PF_G8,         // 8-vertex family member, degree sequence 3,3,3,4,4,4,4,5
    PF_K44_MINUS_E,// K_{4,4} minus one edge
    PF_G9,         // 9-vertex family member
    PF_PETERSEN,
};

std::string pattern_name(PatternId id);
const Graph& pattern_graph(PatternId id);

/// The seven Petersen-family graphs, in the fixed order
/// K6, G7, K331, G8, K44-e, G9, Petersen.
const std::vector<PatternId>& petersen_family_ids();
std::vector<Graph> petersen_family();

/// Exhaustive isomorphism test for the small graphs used here.
bool isomorphic(const Graph& a, const Graph& b);

/// Closure of K6 under delta-Y / Y-delta transforms, up to isomorphism.
/// Used by tests to validate the frozen pattern data.
std::vector<Graph> delta_y_family_of_k6();

}  // namespace embtop
