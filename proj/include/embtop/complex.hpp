#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "embtop/simplex.hpp"

namespace embtop {

/// Face counts by dimension, f_0 .. f_d. Empty for the empty complex.
struct FVector {
    std::vector<long long> counts;

    long long f(int k) const {
        if (k < 0 || k >= static_cast<int>(counts.size())) return 0;
        return counts[k];
    }
    friend bool operator==(const FVector&, const FVector&) = default;
};

/// An abstract simplicial complex stored by its inclusion-maximal faces.
/// The full closure is materialized only on demand (all_faces / faces_of_dim);
/// extremal inputs have closures far larger than their facet lists.
class SimplicialComplex {
public:
    /// The empty complex (no faces at all). Legal value, e.g. the link of an
    /// isolated vertex.
    SimplicialComplex() = default;

    /// Builds the complex generated by `faces`: keeps the inclusion-maximal
    /// subfamily. Unlike `closure()` this accepts an empty list.
    static SimplicialComplex from_faces(std::vector<Simplex> faces);

    bool empty() const { return facets_.empty(); }
    int dim() const { return dim_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    const std::vector<VertexId>& vertices() const { return vertex_set_; }
    std::size_t vertex_count() const { return vertex_set_.size(); }

    bool has_vertex(VertexId v) const;
    bool has_face(const Simplex& s) const;

    /// Every face of the closure, sorted. Exponential in facet size by nature.
    std::vector<Simplex> all_faces() const;

    /// All k-dimensional faces, sorted.
    std::vector<Simplex> faces_of_dim(int k) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<Simplex> facets_;       // sorted lexicographically
    std::vector<VertexId> vertex_set_;  // sorted
    int dim_ = -1;
};

/// Result of a join; the second operand is relabeled to keep vertex
/// universes disjoint and the map is reported for traceability.
struct JoinResult {
    SimplicialComplex complex;
    std::vector<std::pair<VertexId, VertexId>> second_relabeling;  // old -> new
};

/// Complex generated by the given facets. Throws std::invalid_argument
/// "empty complex" when `facets` is empty.
SimplicialComplex closure(std::vector<Simplex> facets);

/// All faces of K containing v. Throws on an unknown vertex.
std::vector<Simplex> star(const SimplicialComplex& K, VertexId v);

/// The link-complex of v: maximal L with v not in L and v * L inside K.
/// Returns the empty complex for a vertex with no proper cofaces.
SimplicialComplex link(const SimplicialComplex& K, VertexId v);

/// Join K * L. Faces are unions of a face of each side (or one side alone).
JoinResult join(const SimplicialComplex& K, const SimplicialComplex& L);

/// k-skeleton, 0 <= k <= dim K.
SimplicialComplex skeleton(const SimplicialComplex& K, int k);

/// Complex of faces present in both inputs (on the shared vertex universe).
SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b);

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b,
                               const SimplicialComplex& c);

FVector f_vector(const SimplicialComplex& K);

/// Number of (dim sigma + 1)-cofaces of sigma. Throws if sigma is not a face.
long long degree(const SimplicialComplex& K, const Simplex& sigma);

struct LinkCountIdentity {
    long long lhs = 0;  // (k+1) * f_k
    long long rhs = 0;  // sum over vertices of #(k-1)-faces of the link
    bool equal = false;
};

/// Checks (k+1) f_k = sum_v #L(v)_{k-1}, exactly. Valid for 1 <= k <= dim K.
LinkCountIdentity verify_link_count_identity(const SimplicialComplex& K, int k);

}  // namespace embtop
