#include "embtop/chain.hpp"

#include <stdexcept>

namespace embtop {

OrientedSimplex OrientedSimplex::from_sequence(const std::vector<VertexId>& ordered) {
    // insertion sort, counting inversions for the permutation parity
    std::vector<VertexId> vs = ordered;
    long long inversions = 0;
    for (std::size_t i = 1; i < vs.size(); ++i) {
        VertexId key = vs[i];
        std::size_t j = i;
        while (j > 0 && vs[j - 1] > key) {
            vs[j] = vs[j - 1];
            --j;
            ++inversions;
        }
        vs[j] = key;
    }
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw std::invalid_argument("oriented simplex: repeated vertex");
    return OrientedSimplex{Simplex::from_sorted(std::move(vs)),
                           inversions % 2 == 0 ? +1 : -1};
}

Chain Chain::of(std::initializer_list<std::pair<OrientedSimplex, long long>> terms) {
    Chain c;
    for (const auto& [os, n] : terms) {
        if (c.terms_.empty()) c.degree_ = os.base.dim();
        c.add(os, n);
    }
    return c;
}

void Chain::add(const Simplex& s, long long c) {
    if (c == 0) return;
    if (terms_.empty())
        degree_ = s.dim();
    else if (s.dim() != degree_)
        throw std::invalid_argument("chain: mixed degrees");
    auto [it, inserted] = terms_.try_emplace(s, 0);
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Chain& Chain::operator+=(const Chain& other) {
    if (!other.terms_.empty() && !terms_.empty() && other.degree_ != degree_)
        throw std::invalid_argument("chain: mixed degrees");
    for (const auto& [s, n] : other.terms_) add(s, n);
    if (terms_.empty() && !other.terms_.empty()) degree_ = other.degree_;
    return *this;
}

Chain& Chain::operator*=(long long scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, n] : terms_) n *= scalar;
    return *this;
}

Chain boundary(const Chain& c) {
    Chain out(c.degree() - 1);
    if (c.degree() <= 0) return out;  // boundary of points is the zero chain
    for (const auto& [s, n] : c.terms()) {
        const auto vs = s.vertices();
        int sign = +1;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            std::vector<VertexId> face;
            face.reserve(vs.size() - 1);
            for (std::size_t j = 0; j < vs.size(); ++j)
                if (j != i) face.push_back(vs[j]);
            out.add(Simplex::from_sorted(std::move(face)), n * sign);
            sign = -sign;
        }
    }
    return out;
}

bool is_cycle(const Chain& c) { return boundary(c).is_zero(); }

Chain cone_chain(VertexId v, const Chain& c) {
    Chain out(c.degree() + 1);
    for (const auto& [s, n] : c.terms()) {
        if (s.contains(v))
            throw std::invalid_argument("cone: apex occurs in the chain carrier");
        // [v, s0, .., sk] with v prepended; sorting v into place flips the
        // sign once per vertex smaller than v.
        int smaller = 0;
        for (VertexId w : s.vertices())
            if (w < v) ++smaller;
        out.add(s.with(v), (smaller % 2 == 0 ? n : -n));
    }
    return out;
}

}  // namespace embtop
