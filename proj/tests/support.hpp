#pragma once

#include <random>

#include "embtop/complex.hpp"

namespace embtop::testing {

/// Random facet family on at most `max_vertices` vertices with faces of
/// dimension at most `max_dim`. Deterministic per rng state.
inline SimplicialComplex random_complex(std::mt19937& rng, int max_vertices = 12,
                                        int max_dim = 3) {
    std::uniform_int_distribution<int> nv_d(3, max_vertices);
    const int nv = nv_d(rng);
    std::uniform_int_distribution<int> nf_d(1, 8);
    const int nf = nf_d(rng);
    std::uniform_int_distribution<int> size_d(1, std::min(max_dim + 1, nv));
    std::uniform_int_distribution<int> v_d(0, nv - 1);
    std::vector<Simplex> facets;
    for (int i = 0; i < nf; ++i) {
        const int size = size_d(rng);
        std::set<VertexId> vs;
        while (static_cast<int>(vs.size()) < size) vs.insert(v_d(rng));
        facets.push_back(Simplex::of({vs.begin(), vs.end()}));
    }
    return closure(std::move(facets));
}

}  // namespace embtop::testing
