#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "embtop/complex.hpp"

namespace embtop {

/// Ground set {0..n-1} plus a list of subsets. Multiset semantics: repeated
/// blocks are legal (the tightness discussion repeats blocks).
struct SetSystem {
    int ground = 0;
    std::vector<std::vector<int>> sets;  // each sorted, duplicate-free

    static SetSystem of(int ground, std::vector<std::vector<int>> sets);
};

/// t(S) = sum of set sizes = sum of element degrees.
long long t_of(const SetSystem& s);

/// kappa_l = number of sets containing element l.
std::vector<long long> degree_profile(const SetSystem& s);

struct TripleIdentity {
    mpz_class lhs;  // sum_l C(kappa_l, 3)
    mpz_class rhs;  // sum over unordered triples of |S_i ^ S_j ^ S_k|
    bool equal = false;
};

/// Exact double count: sum_l C(kappa_l,3) = sum_{i<j<k} |S_i ^ S_j ^ S_k|.
/// The right side is brute-forced independently.
TripleIdentity verify_triple_identity(const SetSystem& s);

struct LemmaChainReport {
    long long n = 0, m = 0, f_bound = 0;
    mpz_class t;
    mpz_class sum_kappa, sum_kappa_sq, sum_kappa_cu;
    mpz_class sum_choose3;  // sum_l C(kappa_l, 3)
    mpz_class triple_sum;   // sum over triples of intersection sizes
    mpz_class cm3_times_f;  // C(m,3) * f
    // step (a): triple_sum <= C(m,3) f
    bool step_a = false;
    // step (b), Hoelder: t^3 <= n^2 * sum kappa^3
    mpz_class t_cubed, n_sq_sum_cu;
    bool step_b = false;
    // step (c): 6 n^2 sum C(kappa,3) >= t^3 - 3 n^2 sum kappa^2, plus the
    // exact expansion 6 sum C(kappa,3) = sum k^3 - 3 sum k^2 + 2 sum k
    mpz_class six_n2_choose3, c_rhs;
    bool step_c = false;
    bool expansion_exact = false;
    bool all_hold = false;
};

/// Verifies each inequality in Lemma 3's proof chain exactly. Requires every
/// triple intersection of distinct sets to have size <= f; a violation throws
/// std::invalid_argument naming the witness triple.
LemmaChainReport verify_lemma_chain(const SetSystem& s, long long f);

/// Result of the tightness construction: base graph on 2*f0 vertices whose
/// edges realize the ground elements, plus one coning apex per set. The link
/// of apex i restricted to the base graph is exactly the subgraph S_i.
struct TightnessComplex {
    SimplicialComplex complex;
    std::vector<VertexId> apexes;                       // per set
    std::vector<std::pair<VertexId, VertexId>> edge_of; // per ground element
    int base_vertices = 0;
};

/// Default identification: ground size must equal C(2*f0, 2) for an integer
/// f0 and elements map to the lexicographic edges of the complete graph.
/// A custom injective identification may be supplied instead.
TightnessComplex build_tightness_complex(
    const SetSystem& s,
    std::optional<std::pair<int, std::vector<std::pair<VertexId, VertexId>>>>
        identification = std::nullopt);

SetSystem generate_random_uniform(int n, int m, int p_num, int p_den, unsigned seed);
SetSystem generate_block_repeated(const SetSystem& base, int repeats);

/// The dual system: ground {0..m-1}; T_i = { j : element i lies in S_j }.
SetSystem dual_system(const SetSystem& s);

/// The Fano plane as a 7-line system over 7 points; every triple of distinct
/// lines meets in at most one point.
SetSystem fano_system();

}  // namespace embtop
