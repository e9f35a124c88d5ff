#include "embtop/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <map>
#include <stdexcept>

namespace embtop {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const Graph& g) {
    BoostGraph bg(g.n());
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    int idx = 0;
    auto eim = boost::get(boost::edge_index, bg);
    for (auto [ei, eend] = boost::edges(bg); ei != eend; ++ei) put(eim, *ei, idx++);
    return bg;
}

bool boost_planar(const Graph& g) {
    BoostGraph bg = to_boost(g);
    return boost::boyer_myrvold_planarity_test(bg);
}

std::vector<std::pair<int, int>> kuratowski_edges(const Graph& g) {
    BoostGraph bg = to_boost(g);
    std::vector<boost::graph_traits<BoostGraph>::edge_descriptor> kur;
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kur));
    if (planar) throw std::logic_error("kuratowski extraction on a planar graph");
    std::set<std::pair<int, int>> dedup;
    for (auto e : kur) {
        int u = static_cast<int>(boost::source(e, bg));
        int v = static_cast<int>(boost::target(e, bg));
        dedup.emplace(std::min(u, v), std::max(u, v));
    }
    return {dedup.begin(), dedup.end()};
}

// Turns an edge-minimal nonplanar graph (a bare K5 or K33 subdivision) into a
// subdivision witness.
MinorWitness witness_from_minimal(const Graph& sub) {
    std::vector<int> branch;
    for (int v = 0; v < sub.n(); ++v)
        if (sub.degree(v) >= 3) branch.push_back(v);

    // walk the subdivided edges between branch vertices
    std::map<std::pair<int, int>, std::vector<int>> path_of;
    std::set<int> branch_set(branch.begin(), branch.end());
    for (int b : branch) {
        for (int first : sub.neighbors(b)) {
            std::vector<int> path{b, first};
            int prev = b, cur = first;
            while (!branch_set.count(cur)) {
                int next = -1;
                for (int w : sub.neighbors(cur))
                    if (w != prev) next = w;
                prev = cur;
                cur = next;
                path.push_back(cur);
            }
            if (path.front() > path.back()) continue;  // keep one direction
            path_of[{path.front(), path.back()}] = path;
        }
    }

    MinorWitness w;
    w.subdivision = true;
    if (branch.size() == 5) {
        w.pattern = PatternId::K5;
        w.branch_vertex = branch;
    } else if (branch.size() == 6) {
        w.pattern = PatternId::K33;
        // 2-color the branch vertices by the subdivided-edge adjacency
        std::map<int, int> color{{branch[0], 0}};
        std::vector<int> queue{branch[0]};
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (const auto& [key, path] : path_of) {
                int other = -1;
                if (key.first == u) other = key.second;
                if (key.second == u) other = key.first;
                if (other >= 0 && !color.count(other)) {
                    color[other] = 1 - color[u];
                    queue.push_back(other);
                }
            }
        }
        std::vector<int> side0, side1;
        for (int b : branch) (color[b] == 0 ? side0 : side1).push_back(b);
        if (side0.size() != 3 || side1.size() != 3)
            throw std::logic_error("kuratowski witness: unexpected bipartition");
        w.branch_vertex = side0;
        w.branch_vertex.insert(w.branch_vertex.end(), side1.begin(), side1.end());
    } else {
        throw std::logic_error("kuratowski witness: unexpected branch count");
    }

    for (auto [a, b] : pattern_graph(w.pattern).edges()) {
        int ha = w.branch_vertex[a], hb = w.branch_vertex[b];
        auto it = path_of.find({std::min(ha, hb), std::max(ha, hb)});
        if (it == path_of.end())
            throw std::logic_error("kuratowski witness: missing path");
        std::vector<int> path = it->second;
        if (path.front() != ha) std::reverse(path.begin(), path.end());
        w.paths.push_back(std::move(path));
    }
    return w;
}

}  // namespace

PlanarityResult is_planar(const Graph& g) {
    PlanarityResult res;
    res.planar = boost_planar(g);
    if (res.planar) return res;

    // start from the Kuratowski subgraph, then prune to an edge-minimal
    // nonplanar graph; its edges are exactly a K5 or K33 subdivision
    Graph sub(g.n());
    for (auto [u, v] : kuratowski_edges(g)) sub.add_edge(u, v);
    for (auto [u, v] : sub.edges()) {
        sub.remove_edge(u, v);
        if (boost_planar(sub)) sub.add_edge(u, v);
    }
    res.kuratowski = witness_from_minimal(sub);
    return res;
}

EdgeBoundCheck edge_bound_check(const Graph& g, EdgeBoundRegime regime) {
    EdgeBoundCheck out;
    out.edges = g.m();
    const long long n = g.n();
    switch (regime) {
        case EdgeBoundRegime::Planar:
            if (n < 3) throw std::invalid_argument("edge bound: planar regime needs n >= 3");
            out.bound = 3 * n - 6;
            break;
        case EdgeBoundRegime::NoK5Subdivision:
            out.bound = kNoK5SubdivEdgeCoefficient * n;
            break;
        case EdgeBoundRegime::NoK6Subdivision:
            out.bound = 4 * n;
            break;
    }
    out.within = out.edges <= out.bound;
    return out;
}

}  // namespace embtop
