#include "embtop/io.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace embtop {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> out;
    std::string t;
    while (iss >> t) out.push_back(t);
    return out;
}

long long parse_int(const std::string& t, int line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw parse_error(line, "expected an integer, got '" + t + "'");
    }
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return in;
}

}  // namespace

SimplicialComplex read_scx(std::istream& in) {
    std::vector<Simplex> facets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto toks = tokens(strip_comment(line));
        if (toks.empty()) continue;
        std::vector<VertexId> vs;
        for (const auto& t : toks) {
            long long v = parse_int(t, lineno);
            if (v < 0) throw parse_error(lineno, "negative vertex id");
            if (v > std::numeric_limits<VertexId>::max())
                throw parse_error(lineno, "vertex id too large");
            vs.push_back(static_cast<VertexId>(v));
        }
        std::vector<VertexId> sorted = vs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw parse_error(lineno, "duplicate vertex within a facet line");
        facets.push_back(Simplex::from_sorted(std::move(sorted)));
    }
    if (facets.empty()) throw parse_error(lineno == 0 ? 1 : lineno, "empty complex");
    return closure(std::move(facets));
}

SimplicialComplex read_scx_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_scx(in);
}

void write_scx(std::ostream& out, const SimplicialComplex& K,
               const std::string& header_comment) {
    if (!header_comment.empty()) out << "# " << header_comment << "\n";
    for (const auto& f : K.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out << ' ';
            out << f[i];
        }
        out << '\n';
    }
}

void write_scx_file(const std::string& path, const SimplicialComplex& K,
                    const std::string& header_comment) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    write_scx(out, K, header_comment);
}

GeomFile read_geom(std::istream& in) {
    PointMap coords;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto toks = tokens(strip_comment(line));
        if (toks.empty()) continue;
        if (toks[0] == "v") {
            if (toks.size() != 5)
                throw parse_error(lineno, "vertex line needs: v <id> <x> <y> <z>");
            long long id = parse_int(toks[1], lineno);
            if (id < 0) throw parse_error(lineno, "negative vertex id");
            VertexId vid = static_cast<VertexId>(id);
            if (coords.count(vid)) throw parse_error(lineno, "duplicate vertex id");
            try {
                coords[vid] = Point3{parse_rational(toks[2]), parse_rational(toks[3]),
                                     parse_rational(toks[4])};
            } catch (const std::invalid_argument& e) {
                throw parse_error(lineno, e.what());
            }
        } else if (toks[0] == "e") {
            if (toks.size() != 3)
                throw parse_error(lineno, "edge line needs: e <id1> <id2>");
            long long a = parse_int(toks[1], lineno);
            long long b = parse_int(toks[2], lineno);
            if (a == b) throw parse_error(lineno, "loop edge");
            VertexId va = static_cast<VertexId>(a), vb = static_cast<VertexId>(b);
            if (!coords.count(va) || !coords.count(vb))
                throw parse_error(lineno, "edge references an undeclared vertex");
            edges.emplace_back(va, vb);
        } else {
            throw parse_error(lineno, "unknown record '" + toks[0] + "'");
        }
    }
    if (coords.empty()) throw parse_error(lineno == 0 ? 1 : lineno, "empty geometry");
    std::vector<Simplex> facets;
    std::set<VertexId> touched;
    for (auto [a, b] : edges) {
        facets.push_back(Simplex::of({a, b}));
        touched.insert(a);
        touched.insert(b);
    }
    for (const auto& [v, p] : coords) {
        (void)p;
        if (!touched.count(v)) facets.push_back(Simplex::of({v}));
    }
    GeomFile g;
    g.curves = EmbeddedCurves::of(closure(std::move(facets)), std::move(coords));
    g.edge_order = std::move(edges);
    return g;
}

GeomFile read_geom_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_geom(in);
}

Chain cycle_from_edge_list(const GeomFile& geom, const std::string& spec) {
    Chain chain(1);
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        long long signed_idx = 0;
        try {
            signed_idx = std::stoll(item);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad edge index '" + item + "'");
        }
        if (signed_idx == 0) throw std::invalid_argument("edge indices are 1-based");
        const std::size_t idx = static_cast<std::size_t>(std::abs(signed_idx)) - 1;
        if (idx >= geom.edge_order.size())
            throw std::invalid_argument("edge index out of range: " + item);
        auto [a, b] = geom.edge_order[idx];
        if (signed_idx < 0) std::swap(a, b);
        // oriented a -> b
        OrientedSimplex os = OrientedSimplex::from_sequence({a, b});
        chain.add(os, 1);
    }
    return chain;
}

SetSystem read_setsystem(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::vector<int>> sets;
    bool header_seen = false;
    long long sets_read = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = strip_comment(line);
        const auto toks = tokens(body);
        if (!header_seen) {
            if (toks.empty()) continue;
            if (toks.size() != 2) throw parse_error(lineno, "header must be 'n m'");
            n = parse_int(toks[0], lineno);
            m = parse_int(toks[1], lineno);
            if (n < 0 || m < 0) throw parse_error(lineno, "negative header value");
            header_seen = true;
            continue;
        }
        if (sets_read == m) {
            if (!toks.empty()) throw parse_error(lineno, "more set lines than m");
            continue;
        }
        // after the header every line (even a blank one) is a set
        std::vector<int> set;
        for (const auto& t : toks) {
            long long e = parse_int(t, lineno);
            if (e < 0 || e >= n) throw parse_error(lineno, "element out of range");
            set.push_back(static_cast<int>(e));
        }
        sets.push_back(std::move(set));
        ++sets_read;
    }
    if (!header_seen) throw parse_error(lineno == 0 ? 1 : lineno, "missing header");
    if (sets_read != m)
        throw parse_error(lineno == 0 ? 1 : lineno, "fewer set lines than m");
    return SetSystem::of(static_cast<int>(n), std::move(sets));
}

SetSystem read_setsystem_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_setsystem(in);
}

void write_setsystem(std::ostream& out, const SetSystem& s) {
    out << s.ground << ' ' << s.sets.size() << '\n';
    for (const auto& set : s.sets) {
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (i) out << ' ';
            out << set[i];
        }
        out << '\n';
    }
}

}  // namespace embtop
