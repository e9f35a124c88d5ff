#include "embtop/graph.hpp"

#include <numeric>
#include <stdexcept>

namespace embtop {

Graph::Graph(int n) : adj_(n), labels_(n) {
    std::iota(labels_.begin(), labels_.end(), 0);
}

Graph Graph::from_complex(const SimplicialComplex& K) {
    if (K.dim() > 1) throw std::invalid_argument("graph: complex has dimension > 1");
    Graph g(static_cast<int>(K.vertex_count()));
    g.labels_ = K.vertices();
    auto index_of = [&](VertexId v) {
        return static_cast<int>(std::lower_bound(g.labels_.begin(), g.labels_.end(), v) -
                                g.labels_.begin());
    };
    for (const auto& f : K.facets())
        if (f.dim() == 1) g.add_edge(index_of(f[0]), index_of(f[1]));
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("graph: loop edge");
    if (u < 0 || v < 0 || u >= n() || v >= n())
        throw std::invalid_argument("graph: vertex out of range");
    if (adj_[u].insert(v).second) {
        adj_[v].insert(u);
        ++m_;
    }
}

void Graph::remove_edge(int u, int v) {
    if (adj_[u].erase(v)) {
        adj_[v].erase(u);
        --m_;
    }
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::connected_subset(const std::vector<int>& sub) const {
    if (sub.empty()) return false;
    std::set<int> members(sub.begin(), sub.end());
    std::vector<int> stack{sub[0]};
    std::set<int> seen{sub[0]};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj_[u])
            if (members.count(w) && seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == members.size();
}

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

// Frozen adjacency data for the Petersen family, derived by closing K6 under
// delta-Y / Y-delta transforms (see delta_y_family_of_k6 and its test).
Graph make_pattern(PatternId id) {
    using E = std::vector<std::pair<int, int>>;
    switch (id) {
        case PatternId::K5:
            return complete(5);
        case PatternId::K33:
            return complete_bipartite(3, 3);
        case PatternId::K6:
            return complete(6);
        case PatternId::PF_G7:
            return Graph::from_edges(
                7, E{{0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                    {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {4, 5}});
        case PatternId::PF_K331:
            return Graph::from_edges(
                7, E{{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                    {2, 4}, {2, 6}, {3, 4}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
        case PatternId::PF_G8:
            return Graph::from_edges(
                8, E{{0, 5}, {0, 6}, {0, 7}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3},
                    {2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 7}, {4, 5}, {4, 7}});
        case PatternId::PF_K44_MINUS_E:
            return Graph::from_edges(
                8, E{{0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                    {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 7}, {4, 7}, {5, 7}});
        case PatternId::PF_G9:
            return Graph::from_edges(
                9, E{{0, 5}, {0, 6}, {0, 7}, {1, 4}, {1, 6}, {1, 8}, {2, 3}, {2, 4},
                    {2, 5}, {2, 6}, {3, 7}, {3, 8}, {4, 5}, {4, 7}, {5, 8}});
        case PatternId::PF_PETERSEN:
            return Graph::from_edges(
                10, E{{0, 5}, {0, 6}, {0, 7}, {1, 4}, {1, 6}, {1, 8}, {2, 3}, {2, 6},
                      {2, 9}, {3, 7}, {3, 8}, {4, 7}, {4, 9}, {5, 8}, {5, 9}});
    }
    throw std::logic_error("unknown pattern");
}

}  // namespace

std::string pattern_name(PatternId id) {
    switch (id) {
        case PatternId::K5: return "K5";
        case PatternId::K33: return "K33";
        case PatternId::K6: return "K6";
        case PatternId::PF_G7: return "PetersenFamily-G7";
        case PatternId::PF_K331: return "K331";
        case PatternId::PF_G8: return "PetersenFamily-G8";
        case PatternId::PF_K44_MINUS_E: return "K44-minus-edge";
        case PatternId::PF_G9: return "PetersenFamily-G9";
        case PatternId::PF_PETERSEN: return "Petersen";
    }
    return "?";
}

const Graph& pattern_graph(PatternId id) {
    static const std::map<PatternId, Graph>* cache = [] {
        auto* m = new std::map<PatternId, Graph>;
        for (PatternId p :
             {PatternId::K5, PatternId::K33, PatternId::K6, PatternId::PF_G7,
              PatternId::PF_K331, PatternId::PF_G8, PatternId::PF_K44_MINUS_E,
              PatternId::PF_G9, PatternId::PF_PETERSEN})
            m->emplace(p, make_pattern(p));
        return m;
    }();
    return cache->at(id);
}

const std::vector<PatternId>& petersen_family_ids() {
    static const std::vector<PatternId> ids{
        PatternId::K6,           PatternId::PF_G7, PatternId::PF_K331,
        PatternId::PF_G8,        PatternId::PF_K44_MINUS_E,
        PatternId::PF_G9,        PatternId::PF_PETERSEN};
    return ids;
}

std::vector<Graph> petersen_family() {
    std::vector<Graph> out;
    for (PatternId id : petersen_family_ids()) out.push_back(pattern_graph(id));
    return out;
}

namespace {

bool iso_rec(const Graph& a, const Graph& b, std::vector<int>& map,
             std::vector<bool>& used, int i) {
    if (i == a.n()) return true;
    for (int j = 0; j < b.n(); ++j) {
        if (used[j] || a.degree(i) != b.degree(j)) continue;
        bool ok = true;
        for (int k = 0; k < i && ok; ++k)
            if (a.has_edge(k, i) != b.has_edge(map[k], j)) ok = false;
        if (!ok) continue;
        map[i] = j;
        used[j] = true;
        if (iso_rec(a, b, map, used, i + 1)) return true;
        used[j] = false;
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    std::vector<int> da, db;
    for (int i = 0; i < a.n(); ++i) da.push_back(a.degree(i));
    for (int i = 0; i < b.n(); ++i) db.push_back(b.degree(i));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map(a.n(), -1);
    std::vector<bool> used(a.n(), false);
    return iso_rec(a, b, map, used, 0);
}

std::vector<Graph> delta_y_family_of_k6() {
    std::vector<Graph> family{complete(6)};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Graph> found;
        for (const Graph& g : family) {
            const int n = g.n();
            // delta-Y on every triangle
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    if (!g.has_edge(a, b)) continue;
                    for (int c = b + 1; c < n; ++c) {
                        if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
                        Graph h(n + 1);
                        for (auto [u, v] : g.edges()) h.add_edge(u, v);
                        h.remove_edge(a, b);
                        h.remove_edge(a, c);
                        h.remove_edge(b, c);
                        h.add_edge(a, n);
                        h.add_edge(b, n);
                        h.add_edge(c, n);
                        found.push_back(std::move(h));
                    }
                }
            // Y-delta on every degree-3 vertex
            for (int y = 0; y < n; ++y) {
                if (g.degree(y) != 3) continue;
                std::vector<int> nb(g.neighbors(y).begin(), g.neighbors(y).end());
                Graph h(n - 1);
                auto rl = [&](int v) { return v < y ? v : v - 1; };
                for (auto [u, v] : g.edges())
                    if (u != y && v != y) h.add_edge(rl(u), rl(v));
                h.add_edge(rl(nb[0]), rl(nb[1]));
                h.add_edge(rl(nb[0]), rl(nb[2]));
                h.add_edge(rl(nb[1]), rl(nb[2]));
                found.push_back(std::move(h));
            }
        }
        for (Graph& h : found) {
            bool known = false;
            for (const Graph& f : family)
                if (isomorphic(f, h)) {
                    known = true;
                    break;
                }
            if (!known) {
                family.push_back(std::move(h));
                grew = true;
            }
        }
    }
    return family;
}

}  // namespace embtop
