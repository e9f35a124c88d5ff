#pragma once

#include "embtop/minors.hpp"

namespace embtop {

struct PlanarityResult {
    bool planar = false;
    /// Present iff nonplanar: a K5 or K33 subdivision witness.
    std::optional<MinorWitness> kuratowski;
};

/// Planarity decision with an independently checkable Kuratowski witness on
/// the negative side. The witness is obtained by pruning a nonplanar subgraph
/// to an edge-minimal one, which is exactly a K5 or K33 subdivision.
PlanarityResult is_planar(const Graph& g);

enum class EdgeBoundRegime { Planar, NoK5Subdivision, NoK6Subdivision };

struct EdgeBoundCheck {
    long long edges = 0;
    long long bound = 0;
    bool within = false;
};

/// Edge-count coefficient used for graphs with no K5 subdivision; the
/// literature gives a linear bound and this implementation pins m <= 3n.
inline constexpr long long kNoK5SubdivEdgeCoefficient = 3;

/// m <= 3n-6 (planar, requires n >= 3), m <= 3n (no K5 subdivision),
/// m <= 4n (no K6 subdivision).
EdgeBoundCheck edge_bound_check(const Graph& g, EdgeBoundRegime regime);

}  // namespace embtop
