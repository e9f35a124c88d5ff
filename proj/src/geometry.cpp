#include "embtop/geometry.hpp"

#include <algorithm>

namespace embtop {

Point3 operator-(const Point3& a, const Point3& b) {
    return Point3{a.x - b.x, a.y - b.y, a.z - b.z};
}

namespace {

mpq_class det3(const Point3& u, const Point3& v, const Point3& w) {
    return u.x * (v.y * w.z - v.z * w.y) - u.y * (v.x * w.z - v.z * w.x) +
           u.z * (v.x * w.y - v.y * w.x);
}

int record(GeneralPositionCertificate* cert, const std::string& id, int sign) {
    if (cert) cert->checked.push_back({id, sign});
    return sign;
}

}  // namespace

int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    return sgn(det3(b - a, c - a, d - a));
}

SegTriResult segment_triangle_intersection(const Point3& p, const Point3& q,
                                           const Point3& a, const Point3& b,
                                           const Point3& c,
                                           GeneralPositionCertificate* cert) {
    const int sp = record(cert, "plane(a,b,c;p)", orient3d(a, b, c, p));
    if (sp == 0) throw degenerate_error("plane(a,b,c;p)", "segment endpoint on triangle plane");
    const int sq = record(cert, "plane(a,b,c;q)", orient3d(a, b, c, q));
    if (sq == 0) throw degenerate_error("plane(a,b,c;q)", "segment endpoint on triangle plane");
    if (sp == sq) return {SegTriClass::Disjoint, 0};

    const int s1 = record(cert, "side(p,q;a,b)", orient3d(p, q, a, b));
    if (s1 == 0) throw degenerate_error("side(p,q;a,b)", "segment line meets triangle edge");
    const int s2 = record(cert, "side(p,q;b,c)", orient3d(p, q, b, c));
    if (s2 == 0) throw degenerate_error("side(p,q;b,c)", "segment line meets triangle edge");
    const int s3 = record(cert, "side(p,q;c,a)", orient3d(p, q, c, a));
    if (s3 == 0) throw degenerate_error("side(p,q;c,a)", "segment line meets triangle edge");

    if (s1 == s2 && s2 == s3) {
        // piercing; the common side sign equals sign((q-p) . ((b-a) x (c-a)))
        return {SegTriClass::Transverse, s1};
    }
    return {SegTriClass::Disjoint, 0};
}

bool point_on_segment(const Point3& t, const Point3& p, const Point3& q) {
    const Point3 d = q - p;
    const Point3 e = t - p;
    // collinear?
    if (d.y * e.z != d.z * e.y || d.z * e.x != d.x * e.z || d.x * e.y != d.y * e.x)
        return false;
    // parameter within [0, 1] along the dominant axis
    const mpq_class dot = d.x * e.x + d.y * e.y + d.z * e.z;
    const mpq_class len2 = d.x * d.x + d.y * d.y + d.z * d.z;
    if (len2 == 0) return t == p;
    return dot >= 0 && dot <= len2;
}

namespace {

struct Point2 {
    mpq_class x, y;
};

int orient2d(const Point2& a, const Point2& b, const Point2& c) {
    return sgn((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

bool on_segment_2d(const Point2& t, const Point2& p, const Point2& q) {
    if (orient2d(p, q, t) != 0) return false;
    return t.x >= std::min(p.x, q.x) && t.x <= std::max(p.x, q.x) &&
           t.y >= std::min(p.y, q.y) && t.y <= std::max(p.y, q.y);
}

// drops the coordinate where |n| is largest, keeping an injective projection
// of the common plane
Point2 project(const Point3& p, int drop) {
    switch (drop) {
        case 0: return {p.y, p.z};
        case 1: return {p.x, p.z};
        default: return {p.x, p.y};
    }
}

int dominant_axis(const Point3& n) {
    const mpq_class ax = abs(n.x), ay = abs(n.y), az = abs(n.z);
    if (ax >= ay && ax >= az) return 0;
    if (ay >= az) return 1;
    return 2;
}

Point3 cross(const Point3& u, const Point3& v) {
    return Point3{u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

bool segments_intersect_2d(const Point2& p, const Point2& q, const Point2& r,
                           const Point2& s) {
    const int o1 = orient2d(p, q, r);
    const int o2 = orient2d(p, q, s);
    const int o3 = orient2d(r, s, p);
    const int o4 = orient2d(r, s, q);
    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
    if (o1 == 0 && on_segment_2d(r, p, q)) return true;
    if (o2 == 0 && on_segment_2d(s, p, q)) return true;
    if (o3 == 0 && on_segment_2d(p, r, s)) return true;
    if (o4 == 0 && on_segment_2d(q, r, s)) return true;
    return false;
}

}  // namespace

bool segments_intersect(const Point3& p, const Point3& q, const Point3& r,
                        const Point3& s) {
    if (orient3d(p, q, r, s) != 0) return false;  // skew segments never meet
    // coplanar: project along a direction the configuration does not contain
    Point3 n = cross(q - p, s - r);
    if (n.x == 0 && n.y == 0 && n.z == 0) n = cross(q - p, r - p);
    if (n.x == 0 && n.y == 0 && n.z == 0) {
        // everything collinear: interval test on the carrier line
        return point_on_segment(r, p, q) || point_on_segment(s, p, q) ||
               point_on_segment(p, r, s) || point_on_segment(q, r, s);
    }
    const int drop = dominant_axis(n);
    return segments_intersect_2d(project(p, drop), project(q, drop), project(r, drop),
                                 project(s, drop));
}

bool point_on_triangle(const Point3& t, const Point3& a, const Point3& b,
                       const Point3& c) {
    if (orient3d(a, b, c, t) != 0) return false;
    const Point3 n = cross(b - a, c - a);
    if (n.x == 0 && n.y == 0 && n.z == 0)
        // degenerate triangle: fall back to its segments
        return point_on_segment(t, a, b) || point_on_segment(t, b, c) ||
               point_on_segment(t, a, c);
    const int drop = dominant_axis(n);
    const Point2 tt = project(t, drop), aa = project(a, drop), bb = project(b, drop),
                 cc = project(c, drop);
    const int o1 = orient2d(aa, bb, tt);
    const int o2 = orient2d(bb, cc, tt);
    const int o3 = orient2d(cc, aa, tt);
    return (o1 >= 0 && o2 >= 0 && o3 >= 0) || (o1 <= 0 && o2 <= 0 && o3 <= 0);
}

int point_in_tetrahedron(const Point3& t, const Point3& a, const Point3& b,
                         const Point3& c, const Point3& d,
                         GeneralPositionCertificate* cert) {
    const int orientation = orient3d(a, b, c, d);
    if (orientation == 0)
        throw degenerate_error("vol(a,b,c,d)", "flat tetrahedron in a 3-chain");
    const int s1 = record(cert, "tet-face(a,b,c;t)", orient3d(a, b, c, t));
    const int s2 = record(cert, "tet-face(a,b,d;t)", orient3d(a, b, d, t));
    const int s3 = record(cert, "tet-face(a,c,d;t)", orient3d(a, c, d, t));
    const int s4 = record(cert, "tet-face(b,c,d;t)", orient3d(b, c, d, t));
    if (s1 == 0 || s2 == 0 || s3 == 0 || s4 == 0)
        throw degenerate_error("tet-face", "0-chain point on tetrahedron boundary");
    // inside iff t is on the d-side of (a,b,c), the c-side of (a,b,d), ...
    if (s1 == orientation && s2 == -orientation && s3 == orientation &&
        s4 == -orientation)
        return orientation;
    return 0;
}

mpq_class parse_rational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace embtop
