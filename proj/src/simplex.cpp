#include "embtop/simplex.hpp"

namespace embtop {

Simplex Simplex::of(std::vector<VertexId> vertices) {
    if (vertices.empty()) throw std::invalid_argument("simplex: empty vertex list");
    std::sort(vertices.begin(), vertices.end());
    if (vertices.front() < 0) throw std::invalid_argument("simplex: negative vertex id");
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::invalid_argument("simplex: repeated vertex");
    return Simplex(std::move(vertices));
}

Simplex Simplex::from_sorted(std::vector<VertexId> vertices) {
    return Simplex(std::move(vertices));
}

Simplex Simplex::without(VertexId v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v)
        throw std::invalid_argument("simplex: vertex not present");
    if (verts_.size() == 1)
        throw std::invalid_argument("simplex: cannot remove the only vertex");
    std::vector<VertexId> out;
    out.reserve(verts_.size() - 1);
    out.insert(out.end(), verts_.begin(), it);
    out.insert(out.end(), it + 1, verts_.end());
    return Simplex(std::move(out));
}

Simplex Simplex::with(VertexId v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it != verts_.end() && *it == v)
        throw std::invalid_argument("simplex: vertex already present");
    std::vector<VertexId> out;
    out.reserve(verts_.size() + 1);
    out.insert(out.end(), verts_.begin(), it);
    out.push_back(v);
    out.insert(out.end(), it, verts_.end());
    return Simplex(std::move(out));
}

std::string Simplex::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(verts_[i]);
    }
    s += '}';
    return s;
}

}  // namespace embtop
