#pragma once

#include <map>
#include <optional>

#include "embtop/chain.hpp"
#include "embtop/complex.hpp"
#include "embtop/geometry.hpp"

namespace embtop {

using PointMap = std::map<VertexId, Point3>;

/// A 1-complex with exact rational coordinates whose straight-line
/// realization is verified to be an embedding at construction: segments of
/// disjoint simplices are disjoint, segments sharing a vertex meet only
/// there, and no vertex lies inside another segment.
struct EmbeddedCurves {
    SimplicialComplex complex;
    PointMap coords;

    static EmbeddedCurves of(SimplicialComplex complex, PointMap coords);
};

/// Signed count of transverse crossings between a 1-chain and a 2-chain with
/// disjoint boundaries. Throws std::invalid_argument when a boundary touches
/// the other carrier and degenerate_error on non-transverse crossings.
long long intersection_number(const Chain& c1, const PointMap& coords1,
                              const Chain& c2, const PointMap& coords2,
                              GeneralPositionCertificate* cert = nullptr);

struct CrossingRecord {
    std::pair<VertexId, VertexId> cone_edge;  // edge of z1 under the cone
    std::pair<VertexId, VertexId> segment;    // edge of z2 crossing it
    int sign = 0;
    long long contribution = 0;
};

struct LinkingOptions {
    /// Fixed apex; when absent the deterministic sequence
    /// apex_k = (3 + k, 1 + k/3, 7 + k/7), k = 0, 1, ... is tried.
    std::optional<Point3> apex;
    bool auto_perturb = true;  // retry the sequence past degenerate apexes
    int max_attempts = 64;
};

struct LinkingResult {
    long long value = 0;
    Point3 apex_used;
    int attempts = 1;  // apexes tried until one was in general position
    std::vector<CrossingRecord> crossings;
    GeneralPositionCertificate certificate;
};

/// k-th apex of the documented deterministic perturbation sequence.
Point3 perturbation_apex(int k);

/// Linking number of two disjoint cycles carried by an embedded 1-complex:
/// the cone over z1 from the apex is paired with z2. The value is independent
/// of the apex; with auto_perturb the wrapper walks the apex sequence past
/// degenerate positions and records which one succeeded.
LinkingResult linking_number(const EmbeddedCurves& curves, const Chain& z1,
                             const Chain& z2, const LinkingOptions& options = {});

struct BoundaryIdentity {
    long long lhs = 0;  // I(c1, boundary c3)
    long long rhs = 0;  // (-1)^1 I(boundary c1, c3)
    bool equal = false;
};

/// Checks I(c_p, boundary c_{d-p+1}) = (-1)^p I(boundary c_p, c_{d-p+1}) for
/// p = 1 in R^3: a 1-chain against a 3-chain of tetrahedra. Both sides are
/// evaluated by independent routes (crossing signs vs. signed point-in-tet).
BoundaryIdentity verify_boundary_identity(const Chain& c1, const PointMap& coords1,
                                          const Chain& c3, const PointMap& coords3);

}  // namespace embtop
