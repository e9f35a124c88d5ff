#pragma once

#include <map>

#include "embtop/simplex.hpp"

namespace embtop {

/// A simplex together with an orientation sign relative to the canonical
/// increasing vertex order.
struct OrientedSimplex {
    Simplex base;
    int sign;  // +1 or -1

    /// Normalizes an arbitrary vertex ordering: sign is the parity of the
    /// permutation that sorts it. Throws on repeated vertices.
    static OrientedSimplex from_sequence(const std::vector<VertexId>& ordered);
};

/// Formal integer combination of oriented simplices of one dimension.
/// Zero coefficients are never stored. The zero chain of any degree is the
/// empty map; degree -1 marks the boundary of a 0-chain.
class Chain {
public:
    Chain() = default;
    explicit Chain(int degree) : degree_(degree) {}

    static Chain of(std::initializer_list<std::pair<OrientedSimplex, long long>> terms);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Simplex, long long>& terms() const { return terms_; }

    long long coefficient(const Simplex& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? 0 : it->second;
    }

    /// Adds c * [s]; drops the term if the sum cancels. Enforces equal degree.
    void add(const Simplex& s, long long c);
    void add(const OrientedSimplex& s, long long c) { add(s.base, c * s.sign); }

    Chain& operator+=(const Chain& other);
    Chain& operator*=(long long scalar);
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator*(long long s, Chain c) { return c *= s; }
    friend Chain operator-(Chain a) { return a *= -1; }

    friend bool operator==(const Chain&, const Chain&) = default;

private:
    int degree_ = -1;
    std::map<Simplex, long long> terms_;
};

/// Alternating-sign simplicial boundary. The face omitting the i-th vertex of
/// the canonical order carries sign (-1)^i; under this convention the face
/// omitting the cone apex of `apex * sigma` is positively oriented, matching
/// the cone identity below. Degree-0 chains map to the zero chain of
/// degree -1.
Chain boundary(const Chain& c);

bool is_cycle(const Chain& c);

/// Cone of a chain from a fresh vertex: each term n * sigma becomes
/// n * [v, sigma]. Requires v to avoid every carrier simplex of c.
/// Satisfies boundary(cone_chain(v, c)) = c - cone_chain(v, boundary(c));
/// in particular the boundary of the cone over a cycle is the cycle itself.
Chain cone_chain(VertexId v, const Chain& c);

}  // namespace embtop
