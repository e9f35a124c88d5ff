#include "embtop/constructions.hpp"

#include <array>
#include <random>
#include <stdexcept>

#include "embtop/planarity.hpp"

namespace embtop {

SimplicialComplex complete_complex(int d, int m) {
    if (d < 0) throw std::invalid_argument("complete complex: negative dimension");
    if (m < d + 1) throw std::invalid_argument("complete complex: too few vertices");
    std::vector<Simplex> facets;
    std::vector<int> idx(d + 1);
    for (int i = 0; i <= d; ++i) idx[i] = i;
    while (true) {
        std::vector<VertexId> vs(idx.begin(), idx.end());
        facets.push_back(Simplex::from_sorted(std::move(vs)));
        int i = d;
        while (i >= 0 && idx[i] == m - (d + 1) + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j <= d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return closure(std::move(facets));
}

SimplicialComplex grunbaum_join(const std::vector<int>& dims) {
    if (dims.empty()) throw std::invalid_argument("grunbaum join: no factors");
    SimplicialComplex out;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        SimplicialComplex factor = complete_complex(dims[i], 2 * dims[i] + 3);
        out = i == 0 ? factor : join(out, factor).complex;
    }
    return out;
}

namespace {

// Gale evenness for C(n,4): every two elements not in the facet must have an
// even number of facet elements strictly between them.
bool gale_even(const std::vector<int>& subset, int n) {
    std::vector<bool> in(n, false);
    for (int v : subset) in[v] = true;
    for (int i = 0; i < n; ++i) {
        if (in[i]) continue;
        for (int j = i + 1; j < n; ++j) {
            if (in[j]) continue;
            int between = 0;
            for (int k = i + 1; k < j; ++k)
                if (in[k]) ++between;
            if (between % 2 != 0) return false;
        }
    }
    return true;
}

}  // namespace

SimplicialComplex cyclic_polytope_boundary(int n) {
    if (n < 6) throw std::invalid_argument("cyclic polytope: need n >= 6");
    std::vector<Simplex> facets;
    std::vector<int> idx{0, 1, 2, 3};
    while (true) {
        if (gale_even(idx, n))
            facets.push_back(Simplex::from_sorted({idx[0], idx[1], idx[2], idx[3]}));
        int i = 3;
        while (i >= 0 && idx[i] == n - 4 + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < 4; ++j) idx[j] = idx[j - 1] + 1;
    }
    return closure(std::move(facets));
}

SimplicialComplex cyclic_polytope_boundary_drop_facet(int n, std::size_t facet_index) {
    SimplicialComplex K = cyclic_polytope_boundary(n);
    std::vector<Simplex> facets = K.facets();
    if (facet_index >= facets.size())
        throw std::invalid_argument("cyclic polytope: facet index out of range");
    facets.erase(facets.begin() + static_cast<std::ptrdiff_t>(facet_index));
    // dropping a tetrahedron keeps all its triangles: each is shared with a
    // neighboring facet
    return closure(std::move(facets));
}

SimplicialComplex double_cone(const Graph& g) {
    const VertexId p = g.n();
    const VertexId q = g.n() + 1;
    std::vector<Simplex> facets;
    for (auto [u, v] : g.edges()) {
        facets.push_back(Simplex::of({p, u, v}));
        facets.push_back(Simplex::of({q, u, v}));
    }
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) == 0) {
            facets.push_back(Simplex::of({p, v}));
            facets.push_back(Simplex::of({q, v}));
        }
    }
    if (facets.empty()) throw std::invalid_argument("double cone: empty graph");
    return closure(std::move(facets));
}

SimplicialComplex staircase_complex(int a, int b) {
    if (a < 2 || b < 2) throw std::invalid_argument("staircase: need a, b >= 2");
    std::vector<Simplex> facets;
    for (int i = 0; i + 1 < a; ++i)
        for (int j = 0; j + 1 < b; ++j)
            facets.push_back(Simplex::from_sorted({i, i + 1, a + j, a + j + 1}));
    return closure(std::move(facets));
}

Graph apex_graph(const Graph& planar_part) {
    if (!is_planar(planar_part).planar)
        throw std::invalid_argument("apex graph: input is not planar");
    Graph g(planar_part.n() + 1);
    for (auto [u, v] : planar_part.edges()) g.add_edge(u, v);
    const int apex = planar_part.n();
    for (int v = 0; v < planar_part.n(); ++v) g.add_edge(v, apex);
    return g;
}

Graph maximal_planar(int n, unsigned seed) {
    if (n < 3) throw std::invalid_argument("maximal planar: need n >= 3");
    std::mt19937 rng(seed);
    Graph g(n);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    // faces of the current triangulation (outer face included: on the sphere)
    std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
    for (int v = 3; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
        const auto f = faces[pick(rng)];
        for (int u : f) g.add_edge(v, u);
        auto it = std::find(faces.begin(), faces.end(), f);
        faces.erase(it);
        faces.push_back({f[0], f[1], v});
        faces.push_back({f[0], f[2], v});
        faces.push_back({f[1], f[2], v});
    }
    return g;
}

}  // namespace embtop
