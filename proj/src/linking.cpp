#include "embtop/linking.hpp"

#include <stdexcept>

namespace embtop {

namespace {

const Point3& coord_of(const PointMap& coords, VertexId v) {
    auto it = coords.find(v);
    if (it == coords.end())
        throw std::invalid_argument("missing coordinates for vertex " + std::to_string(v));
    return it->second;
}

// carrier points of a 0-chain
std::vector<std::pair<Point3, long long>> carrier_points(const Chain& c,
                                                         const PointMap& coords) {
    std::vector<std::pair<Point3, long long>> out;
    for (const auto& [s, n] : c.terms()) out.emplace_back(coord_of(coords, s[0]), n);
    return out;
}

void require_degree(const Chain& c, int degree, const char* what) {
    if (!c.is_zero() && c.degree() != degree)
        throw std::invalid_argument(std::string(what) + ": wrong chain degree");
}

}  // namespace

EmbeddedCurves EmbeddedCurves::of(SimplicialComplex complex, PointMap coords) {
    if (complex.dim() > 1)
        throw std::invalid_argument("embedded curves: complex dimension > 1");
    for (VertexId v : complex.vertices())
        if (!coords.count(v))
            throw std::invalid_argument("embedded curves: vertex " + std::to_string(v) +
                                        " has no coordinates");
    const auto& verts = complex.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (coords.at(verts[i]) == coords.at(verts[j]))
                throw std::invalid_argument("embedded curves: coincident vertices " +
                                            std::to_string(verts[i]) + ", " +
                                            std::to_string(verts[j]));

    const auto edges = complex.faces_of_dim(1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Point3& p = coords.at(edges[i][0]);
        const Point3& q = coords.at(edges[i][1]);
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Point3& r = coords.at(edges[j][0]);
            const Point3& s = coords.at(edges[j][1]);
            VertexId shared = -1;
            int shared_count = 0;
            for (VertexId u : edges[i].vertices())
                if (edges[j].contains(u)) {
                    shared = u;
                    ++shared_count;
                }
            if (shared_count == 0) {
                if (segments_intersect(p, q, r, s))
                    throw std::invalid_argument("embedded curves: edges " +
                                                edges[i].to_string() + " and " +
                                                edges[j].to_string() + " intersect");
            } else if (shared_count == 1) {
                const Point3& tip_i =
                    coords.at(edges[i][0] == shared ? edges[i][1] : edges[i][0]);
                const Point3& tip_j =
                    coords.at(edges[j][0] == shared ? edges[j][1] : edges[j][0]);
                const Point3& hub = coords.at(shared);
                if (point_on_segment(tip_i, hub, tip_j) ||
                    point_on_segment(tip_j, hub, tip_i))
                    throw std::invalid_argument("embedded curves: edges " +
                                                edges[i].to_string() + " and " +
                                                edges[j].to_string() +
                                                " overlap beyond the shared vertex");
            }
        }
        for (VertexId v : complex.vertices()) {
            if (edges[i].contains(v)) continue;
            if (point_on_segment(coords.at(v), p, q))
                throw std::invalid_argument("embedded curves: vertex " +
                                            std::to_string(v) + " lies on edge " +
                                            edges[i].to_string());
        }
    }
    return EmbeddedCurves{std::move(complex), std::move(coords)};
}

long long intersection_number(const Chain& c1, const PointMap& coords1,
                              const Chain& c2, const PointMap& coords2,
                              GeneralPositionCertificate* cert) {
    require_degree(c1, 1, "intersection number (first argument)");
    require_degree(c2, 2, "intersection number (second argument)");

    // boundary of c1 must avoid the carrier of c2
    for (const auto& [pt, n] : carrier_points(boundary(c1), coords1)) {
        (void)n;
        for (const auto& [tri, mcoef] : c2.terms()) {
            (void)mcoef;
            if (point_on_triangle(pt, coord_of(coords2, tri[0]), coord_of(coords2, tri[1]),
                                  coord_of(coords2, tri[2])))
                throw std::invalid_argument(
                    "intersection number: boundary of the 1-chain touches the 2-chain");
        }
    }
    // boundary of c2 must avoid the carrier of c1
    const Chain bc2 = boundary(c2);
    for (const auto& [bseg, bn] : bc2.terms()) {
        (void)bn;
        for (const auto& [seg, n] : c1.terms()) {
            (void)n;
            if (segments_intersect(coord_of(coords1, seg[0]), coord_of(coords1, seg[1]),
                                   coord_of(coords2, bseg[0]),
                                   coord_of(coords2, bseg[1])))
                throw std::invalid_argument(
                    "intersection number: boundary of the 2-chain touches the 1-chain");
        }
    }

    long long total = 0;
    for (const auto& [seg, n] : c1.terms()) {
        const Point3& p = coord_of(coords1, seg[0]);
        const Point3& q = coord_of(coords1, seg[1]);
        for (const auto& [tri, m] : c2.terms()) {
            const SegTriResult r = segment_triangle_intersection(
                p, q, coord_of(coords2, tri[0]), coord_of(coords2, tri[1]),
                coord_of(coords2, tri[2]), cert);
            if (r.kind == SegTriClass::Transverse) total += n * m * r.sign;
        }
    }
    return total;
}

Point3 perturbation_apex(int k) {
    return Point3{mpq_class(3 + k), mpq_class(1) + mpq_class(k, 3),
                  mpq_class(7) + mpq_class(k, 7)};
}

namespace {

LinkingResult linking_once(const EmbeddedCurves& curves, const Chain& z1,
                           const Chain& z2, const Point3& apex) {
    LinkingResult res;
    res.apex_used = apex;
    const PointMap& coords = curves.coords;

    // cone triangles must be honest triangles
    for (const auto& [seg, n] : z1.terms()) {
        (void)n;
        const Point3& u = coord_of(coords, seg[0]);
        const Point3& v = coord_of(coords, seg[1]);
        const Point3 d1 = u - apex, d2 = v - apex;
        const Point3 n3{d1.y * d2.z - d1.z * d2.y, d1.z * d2.x - d1.x * d2.z,
                        d1.x * d2.y - d1.y * d2.x};
        if (n3.x == 0 && n3.y == 0 && n3.z == 0)
            throw degenerate_error("cone(apex;" + std::to_string(seg[0]) + "," +
                                       std::to_string(seg[1]) + ")",
                                   "apex collinear with a cycle segment");
    }

    for (const auto& [seg2, m] : z2.terms()) {
        const Point3& p = coord_of(coords, seg2[0]);
        const Point3& q = coord_of(coords, seg2[1]);
        for (const auto& [seg1, n] : z1.terms()) {
            const Point3& u = coord_of(coords, seg1[0]);
            const Point3& v = coord_of(coords, seg1[1]);
            const SegTriResult r =
                segment_triangle_intersection(p, q, apex, u, v, &res.certificate);
            if (r.kind == SegTriClass::Transverse) {
                CrossingRecord rec;
                rec.cone_edge = {seg1[0], seg1[1]};
                rec.segment = {seg2[0], seg2[1]};
                rec.sign = r.sign;
                rec.contribution = n * m * r.sign;
                res.value += rec.contribution;
                res.crossings.push_back(rec);
            }
        }
    }
    return res;
}

}  // namespace

LinkingResult linking_number(const EmbeddedCurves& curves, const Chain& z1,
                             const Chain& z2, const LinkingOptions& options) {
    require_degree(z1, 1, "linking number (z1)");
    require_degree(z2, 1, "linking number (z2)");
    if (!is_cycle(z1)) throw std::invalid_argument("linking number: z1 is not a cycle");
    if (!is_cycle(z2)) throw std::invalid_argument("linking number: z2 is not a cycle");

    std::set<VertexId> verts1;
    for (const auto& [s, n] : z1.terms()) {
        (void)n;
        if (!curves.complex.has_face(s))
            throw std::invalid_argument("linking number: z1 leaves the complex");
        verts1.insert(s[0]);
        verts1.insert(s[1]);
    }
    for (const auto& [s, n] : z2.terms()) {
        (void)n;
        if (!curves.complex.has_face(s))
            throw std::invalid_argument("linking number: z2 leaves the complex");
        // disjoint carriers: the complex is embedded, so sharing no vertex
        // is exactly geometric disjointness
        if (verts1.count(s[0]) || verts1.count(s[1]))
            throw std::invalid_argument("linking number: cycles share a vertex");
    }

    if (options.apex) {
        LinkingResult res = linking_once(curves, z1, z2, *options.apex);
        res.attempts = 1;
        return res;
    }
    int attempts = 0;
    for (int k = 0; k < options.max_attempts; ++k) {
        ++attempts;
        try {
            LinkingResult res = linking_once(curves, z1, z2, perturbation_apex(k));
            res.attempts = attempts;
            return res;
        } catch (const degenerate_error&) {
            if (!options.auto_perturb) throw;
        }
    }
    throw degenerate_error("apex-sequence",
                           "no apex in general position within max_attempts");
}

BoundaryIdentity verify_boundary_identity(const Chain& c1, const PointMap& coords1,
                                          const Chain& c3, const PointMap& coords3) {
    require_degree(c1, 1, "boundary identity (c1)");
    require_degree(c3, 3, "boundary identity (c3)");
    BoundaryIdentity out;
    out.lhs = intersection_number(c1, coords1, boundary(c3), coords3);

    long long i03 = 0;
    for (const auto& [pt, n] : carrier_points(boundary(c1), coords1)) {
        for (const auto& [tet, m] : c3.terms()) {
            const int w = point_in_tetrahedron(
                pt, coord_of(coords3, tet[0]), coord_of(coords3, tet[1]),
                coord_of(coords3, tet[2]), coord_of(coords3, tet[3]));
            i03 += n * m * w;
        }
    }
    out.rhs = -i03;  // (-1)^p with p = 1
    out.equal = out.lhs == out.rhs;
    return out;
}

}  // namespace embtop
