#pragma once

#include "embtop/complex.hpp"
#include "embtop/graph.hpp"

namespace embtop {

/// Complete d-complex on m vertices: all (d+1)-subsets as facets.
SimplicialComplex complete_complex(int d, int m);

/// Iterated join of complete complexes K^{d_i}_{2d_i+3}. Dimension is
/// sum(d_i) + p - 1; these are the standard minimally non-embeddable
/// complexes and serve as positive controls for the scanner.
SimplicialComplex grunbaum_join(const std::vector<int>& dims);

/// Boundary complex of the cyclic 4-polytope C(n,4): facets are the
/// 4-subsets of {0..n-1} selected by Gale's evenness condition.
SimplicialComplex cyclic_polytope_boundary(int n);

/// Same with one facet removed (by index into the sorted facet list); the
/// result embeds in R^3.
SimplicialComplex cyclic_polytope_boundary_drop_facet(int n, std::size_t facet_index = 0);

/// Two fresh apexes coned over every edge of G; the link of either apex is
/// exactly G.
SimplicialComplex double_cone(const Graph& g);

/// Combinatorial staircase triangulation of points on two skew lines:
/// tetrahedra {u_i, u_i+1, w_j, w_j+1} for all i, j, giving (a-1)(b-1) of
/// them. Vertices 0..a-1 are the u-line, a..a+b-1 the w-line.
SimplicialComplex staircase_complex(int a, int b);

/// Planar graph plus one vertex adjacent to all others. Throws if the input
/// is not planar.
Graph apex_graph(const Graph& planar_part);

/// Deterministic stacked (Apollonian) triangulation: maximal planar with
/// exactly 3n-6 edges. Used as test stock.
Graph maximal_planar(int n, unsigned seed);

}  // namespace embtop
