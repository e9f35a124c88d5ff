#include "embtop/complex.hpp"

#include <stdexcept>

namespace embtop {

namespace {

// Keeps only inclusion-maximal simplices; result sorted and unique.
std::vector<Simplex> maximalize(std::vector<Simplex> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < faces.size() && !contained; ++j) {
            if (i == j) continue;
            if (faces[i].size() < faces[j].size() && faces[i].is_subset_of(faces[j]))
                contained = true;
            else if (faces[i].size() == faces[j].size() && i > j && faces[i] == faces[j])
                contained = true;
        }
        if (!contained) out.push_back(faces[i]);
    }
    return out;
}

// All nonempty subsets of `s` of dimension exactly k, appended to `out`.
void k_subsets(const Simplex& s, int k, std::set<Simplex>& out) {
    const auto vs = s.vertices();
    const int n = static_cast<int>(vs.size());
    const int r = k + 1;
    if (r > n || r <= 0) return;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        std::vector<VertexId> pick(r);
        for (int i = 0; i < r; ++i) pick[i] = vs[idx[i]];
        out.insert(Simplex::from_sorted(std::move(pick)));
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(std::vector<Simplex> faces) {
    SimplicialComplex K;
    K.facets_ = maximalize(std::move(faces));
    std::set<VertexId> vs;
    for (const auto& f : K.facets_) {
        K.dim_ = std::max(K.dim_, f.dim());
        for (VertexId v : f.vertices()) vs.insert(v);
    }
    K.vertex_set_.assign(vs.begin(), vs.end());
    return K;
}

bool SimplicialComplex::has_vertex(VertexId v) const {
    return std::binary_search(vertex_set_.begin(), vertex_set_.end(), v);
}

bool SimplicialComplex::has_face(const Simplex& s) const {
    for (const auto& f : facets_)
        if (s.is_subset_of(f)) return true;
    return false;
}

std::vector<Simplex> SimplicialComplex::all_faces() const {
    std::set<Simplex> out;
    for (const auto& f : facets_)
        for (int k = 0; k <= f.dim(); ++k) k_subsets(f, k, out);
    return {out.begin(), out.end()};
}

std::vector<Simplex> SimplicialComplex::faces_of_dim(int k) const {
    std::set<Simplex> out;
    for (const auto& f : facets_) k_subsets(f, k, out);
    return {out.begin(), out.end()};
}

SimplicialComplex closure(std::vector<Simplex> facets) {
    if (facets.empty()) throw std::invalid_argument("empty complex");
    return SimplicialComplex::from_faces(std::move(facets));
}

std::vector<Simplex> star(const SimplicialComplex& K, VertexId v) {
    if (!K.has_vertex(v)) throw std::invalid_argument("star: unknown vertex");
    std::set<Simplex> out;
    for (const auto& f : K.facets()) {
        if (!f.contains(v)) continue;
        // faces of f containing v = {v} joined with subsets of f - v
        std::vector<VertexId> rest;
        for (VertexId w : f.vertices())
            if (w != v) rest.push_back(w);
        const int n = static_cast<int>(rest.size());
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<VertexId> pick{v};
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) pick.push_back(rest[i]);
            out.insert(Simplex::of(std::move(pick)));
        }
    }
    return {out.begin(), out.end()};
}

SimplicialComplex link(const SimplicialComplex& K, VertexId v) {
    if (!K.has_vertex(v)) throw std::invalid_argument("link: unknown vertex");
    std::vector<Simplex> candidates;
    for (const auto& f : K.facets()) {
        if (!f.contains(v)) continue;
        if (f.size() == 1) continue;  // isolated vertex contributes nothing
        candidates.push_back(f.without(v));
    }
    return SimplicialComplex::from_faces(std::move(candidates));
}

JoinResult join(const SimplicialComplex& K, const SimplicialComplex& L) {
    JoinResult res;
    VertexId shift = 0;
    if (!K.vertices().empty()) shift = K.vertices().back() + 1;
    for (VertexId v : L.vertices()) res.second_relabeling.emplace_back(v, v + shift);

    auto shifted = [&](const Simplex& s) {
        std::vector<VertexId> vs(s.vertices().begin(), s.vertices().end());
        for (auto& v : vs) v += shift;
        return Simplex::from_sorted(std::move(vs));
    };

    std::vector<Simplex> facets;
    if (K.empty()) {
        for (const auto& g : L.facets()) facets.push_back(shifted(g));
    } else if (L.empty()) {
        facets = K.facets();
    } else {
        for (const auto& f : K.facets())
            for (const auto& g : L.facets()) {
                std::vector<VertexId> vs(f.vertices().begin(), f.vertices().end());
                const Simplex sg = shifted(g);
                vs.insert(vs.end(), sg.vertices().begin(), sg.vertices().end());
                std::sort(vs.begin(), vs.end());
                facets.push_back(Simplex::from_sorted(std::move(vs)));
            }
    }
    res.complex = SimplicialComplex::from_faces(std::move(facets));
    return res;
}

SimplicialComplex skeleton(const SimplicialComplex& K, int k) {
    if (k < 0 || k > K.dim()) throw std::invalid_argument("skeleton: k out of range");
    std::vector<Simplex> faces;
    for (const auto& f : K.facets()) {
        if (f.dim() <= k) {
            faces.push_back(f);
        } else {
            std::set<Simplex> sub;
            k_subsets(f, k, sub);
            faces.insert(faces.end(), sub.begin(), sub.end());
        }
    }
    return SimplicialComplex::from_faces(std::move(faces));
}

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Simplex> candidates;
    for (const auto& f : a.facets())
        for (const auto& g : b.facets()) {
            std::vector<VertexId> common;
            std::set_intersection(f.vertices().begin(), f.vertices().end(),
                                  g.vertices().begin(), g.vertices().end(),
                                  std::back_inserter(common));
            if (!common.empty())
                candidates.push_back(Simplex::from_sorted(std::move(common)));
        }
    return SimplicialComplex::from_faces(std::move(candidates));
}

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b,
                               const SimplicialComplex& c) {
    return intersection(intersection(a, b), c);
}

FVector f_vector(const SimplicialComplex& K) {
    FVector fv;
    if (K.empty()) return fv;
    fv.counts.assign(K.dim() + 1, 0);
    for (const auto& s : K.all_faces()) fv.counts[s.dim()] += 1;
    return fv;
}

long long degree(const SimplicialComplex& K, const Simplex& sigma) {
    if (!K.has_face(sigma)) throw std::invalid_argument("degree: not a face");
    std::set<Simplex> cofaces;
    for (const auto& f : K.facets()) {
        if (!sigma.is_subset_of(f)) continue;
        for (VertexId v : f.vertices()) {
            if (sigma.contains(v)) continue;
            cofaces.insert(sigma.with(v));
        }
    }
    return static_cast<long long>(cofaces.size());
}

LinkCountIdentity verify_link_count_identity(const SimplicialComplex& K, int k) {
    if (k < 1 || k > K.dim())
        throw std::invalid_argument("link count identity: k out of range");
    LinkCountIdentity r;
    r.lhs = static_cast<long long>(k + 1) * f_vector(K).f(k);
    for (VertexId v : K.vertices()) {
        const SimplicialComplex L = link(K, v);
        r.rhs += f_vector(L).f(k - 1);
    }
    r.equal = (r.lhs == r.rhs);
    return r;
}

}  // namespace embtop
