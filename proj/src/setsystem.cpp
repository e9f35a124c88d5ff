#include "embtop/setsystem.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace embtop {

namespace {

mpz_class mz(long long v) { return mpz_class(static_cast<long>(v)); }

mpz_class choose3(long long k) {
    if (k < 3) return 0;
    const mpz_class z = mz(k);
    return z * mz(k - 1) * mz(k - 2) / 6;
}

long long triple_intersection_size(const std::vector<int>& a, const std::vector<int>& b,
                                   const std::vector<int>& c) {
    std::vector<int> ab, abc;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ab));
    std::set_intersection(ab.begin(), ab.end(), c.begin(), c.end(),
                          std::back_inserter(abc));
    return static_cast<long long>(abc.size());
}

}  // namespace

SetSystem SetSystem::of(int ground, std::vector<std::vector<int>> sets) {
    if (ground < 0) throw std::invalid_argument("set system: negative ground size");
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (!s.empty() && (s.front() < 0 || s.back() >= ground))
            throw std::invalid_argument("set system: element out of range");
    }
    return SetSystem{ground, std::move(sets)};
}

long long t_of(const SetSystem& s) {
    long long t = 0;
    for (const auto& set : s.sets) t += static_cast<long long>(set.size());
    return t;
}

std::vector<long long> degree_profile(const SetSystem& s) {
    std::vector<long long> kappa(s.ground, 0);
    for (const auto& set : s.sets)
        for (int e : set) kappa[e] += 1;
    return kappa;
}

TripleIdentity verify_triple_identity(const SetSystem& s) {
    TripleIdentity out;
    for (long long k : degree_profile(s)) out.lhs += choose3(k);
    const int m = static_cast<int>(s.sets.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k)
                out.rhs += mz(triple_intersection_size(s.sets[i], s.sets[j], s.sets[k]));
    out.equal = (out.lhs == out.rhs);
    return out;
}

LemmaChainReport verify_lemma_chain(const SetSystem& s, long long f) {
    LemmaChainReport r;
    r.n = s.ground;
    r.m = static_cast<long long>(s.sets.size());
    r.f_bound = f;

    const int m = static_cast<int>(s.sets.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                long long size = triple_intersection_size(s.sets[i], s.sets[j], s.sets[k]);
                if (size > f)
                    throw std::invalid_argument(
                        "lemma chain: triple intersection bound violated by sets (" +
                        std::to_string(i) + "," + std::to_string(j) + "," +
                        std::to_string(k) + "), size " + std::to_string(size));
                r.triple_sum += mz(size);
            }

    const auto kappa = degree_profile(s);
    for (long long k : kappa) {
        const mpz_class z = mz(k);
        r.sum_kappa += z;
        r.sum_kappa_sq += z * z;
        r.sum_kappa_cu += z * z * z;
        r.sum_choose3 += choose3(k);
    }
    r.t = mz(t_of(s));

    // (a) sum over triples <= C(m,3) * f
    r.cm3_times_f = choose3(r.m) * mz(f);
    r.step_a = r.triple_sum <= r.cm3_times_f;

    // (b) Hoelder, cleared of denominators: t^3 <= n^2 * sum kappa^3
    r.t_cubed = r.t * r.t * r.t;
    r.n_sq_sum_cu = mz(r.n) * mz(r.n) * r.sum_kappa_cu;
    r.step_b = r.t_cubed <= r.n_sq_sum_cu;

    // exact expansion 6 * sum C(kappa,3) = sum k^3 - 3 sum k^2 + 2 sum k
    r.expansion_exact =
        6 * r.sum_choose3 == r.sum_kappa_cu - 3 * r.sum_kappa_sq + 2 * r.sum_kappa;

    // (c) 6 n^2 sum C(kappa,3) >= t^3 - 3 n^2 sum kappa^2
    r.six_n2_choose3 = 6 * mz(r.n) * mz(r.n) * r.sum_choose3;
    r.c_rhs = r.t_cubed - 3 * mz(r.n) * mz(r.n) * r.sum_kappa_sq;
    r.step_c = r.six_n2_choose3 >= r.c_rhs;

    r.all_hold = r.step_a && r.step_b && r.step_c && r.expansion_exact;
    return r;
}

TightnessComplex build_tightness_complex(
    const SetSystem& s,
    std::optional<std::pair<int, std::vector<std::pair<VertexId, VertexId>>>>
        identification) {
    TightnessComplex out;
    if (identification) {
        out.base_vertices = identification->first;
        out.edge_of = identification->second;
        if (static_cast<int>(out.edge_of.size()) != s.ground)
            throw std::invalid_argument("tightness: identification size mismatch");
        std::set<std::pair<VertexId, VertexId>> seen;
        for (auto& [u, v] : out.edge_of) {
            if (u == v || u < 0 || v < 0 || u >= out.base_vertices ||
                v >= out.base_vertices)
                throw std::invalid_argument("tightness: bad edge in identification");
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second)
                throw std::invalid_argument("tightness: identification not injective");
        }
    } else {
        // ground must be C(2 f0, 2) = f0 (2 f0 - 1)
        int f0 = 0;
        while (static_cast<long long>(f0) * (2 * f0 - 1) < s.ground) ++f0;
        if (static_cast<long long>(f0) * (2 * f0 - 1) != s.ground)
            throw std::invalid_argument(
                "tightness: ground size is not C(2 f0, 2) for integral f0; "
                "supply an explicit identification");
        out.base_vertices = 2 * f0;
        for (VertexId u = 0; u < out.base_vertices; ++u)
            for (VertexId v = u + 1; v < out.base_vertices; ++v)
                out.edge_of.emplace_back(u, v);
    }

    std::vector<Simplex> facets;
    std::vector<bool> covered(s.ground, false);
    for (std::size_t i = 0; i < s.sets.size(); ++i) {
        const VertexId apex = out.base_vertices + static_cast<VertexId>(i);
        out.apexes.push_back(apex);
        if (s.sets[i].empty()) {
            facets.push_back(Simplex::of({apex}));
            continue;
        }
        for (int e : s.sets[i]) {
            covered[e] = true;
            auto [u, v] = out.edge_of[e];
            facets.push_back(Simplex::of({apex, u, v}));
        }
    }
    for (int e = 0; e < s.ground; ++e)
        if (!covered[e])
            facets.push_back(Simplex::of({out.edge_of[e].first, out.edge_of[e].second}));
    if (facets.empty()) throw std::invalid_argument("tightness: empty construction");
    out.complex = closure(std::move(facets));
    return out;
}

SetSystem generate_random_uniform(int n, int m, int p_num, int p_den, unsigned seed) {
    if (n < 0 || m < 0 || p_den <= 0 || p_num < 0 || p_num > p_den)
        throw std::invalid_argument("random system: bad parameters");
    std::mt19937 rng(seed);
    std::vector<std::vector<int>> sets(m);
    for (int i = 0; i < m; ++i)
        for (int e = 0; e < n; ++e)
            if (static_cast<int>(rng() % static_cast<unsigned>(p_den)) < p_num)
                sets[i].push_back(e);
    return SetSystem::of(n, std::move(sets));
}

SetSystem generate_block_repeated(const SetSystem& base, int repeats) {
    if (repeats < 1) throw std::invalid_argument("block repeat: need repeats >= 1");
    std::vector<std::vector<int>> sets;
    for (int r = 0; r < repeats; ++r)
        sets.insert(sets.end(), base.sets.begin(), base.sets.end());
    return SetSystem::of(base.ground, std::move(sets));
}

SetSystem dual_system(const SetSystem& s) {
    std::vector<std::vector<int>> duals(s.ground);
    for (std::size_t j = 0; j < s.sets.size(); ++j)
        for (int e : s.sets[j]) duals[e].push_back(static_cast<int>(j));
    return SetSystem::of(static_cast<int>(s.sets.size()), std::move(duals));
}

SetSystem fano_system() {
    return SetSystem::of(7, {{0, 1, 2},
                             {0, 3, 4},
                             {0, 5, 6},
                             {1, 3, 5},
                             {1, 4, 6},
                             {2, 3, 6},
                             {2, 4, 5}});
}

}  // namespace embtop
