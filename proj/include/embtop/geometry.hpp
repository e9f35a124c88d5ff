#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace embtop {

/// Exact rational point; no floating point enters any predicate.
struct Point3 {
    mpq_class x, y, z;

    friend bool operator==(const Point3& a, const Point3& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

Point3 operator-(const Point3& a, const Point3& b);

/// Record of one evaluated orientation predicate; a successful computation
/// certifies general position by listing only nonzero signs.
struct PredicateRecord {
    std::string id;
    int sign;
};

struct GeneralPositionCertificate {
    std::vector<PredicateRecord> checked;
};

/// Raised when a predicate needed by a computation evaluates to zero.
class degenerate_error : public std::runtime_error {
public:
    degenerate_error(std::string predicate, const std::string& detail)
        : std::runtime_error("general position violated: " + detail +
                             " [predicate " + predicate + "]"),
          predicate_(std::move(predicate)) {}
    const std::string& predicate() const { return predicate_; }

private:
    std::string predicate_;
};

/// Sign conventions, frozen for the whole geometric layer:
///   - R^3 carries the right-handed orientation of (x, y, z);
///   - orient3d(a,b,c,d) = sign det[b-a; c-a; d-a] (rows): positive when d
///     lies on the side of plane (a,b,c) that (b-a) x (c-a) points into;
///   - an oriented triangle (a,b,c) has normal (b-a) x (c-a);
///   - the crossing sign of a directed segment p->q piercing triangle (a,b,c)
///     is sign((q-p) . normal) = the common sign of orient3d(p,q,a,b),
///     orient3d(p,q,b,c), orient3d(p,q,c,a);
///   - a positively oriented tetrahedron (a,b,c,d) is one with
///     orient3d(a,b,c,d) = +1; a 0-chain point inside it pairs with sign
///     equal to that orientation.
int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

enum class SegTriClass { Disjoint, Transverse };

struct SegTriResult {
    SegTriClass kind = SegTriClass::Disjoint;
    int sign = 0;  // nonzero only when Transverse
};

/// Classifies a closed segment against a closed triangle. Transverse means
/// the open segment crosses the open triangle in one point. Every
/// configuration touching boundaries (endpoint on the plane, segment through
/// an edge or vertex) raises degenerate_error carrying the zero predicate.
/// Evaluated predicates are appended to `cert` when given.
SegTriResult segment_triangle_intersection(const Point3& p, const Point3& q,
                                           const Point3& a, const Point3& b,
                                           const Point3& c,
                                           GeneralPositionCertificate* cert = nullptr);

/// True iff the closed segments share at least one point. Exact; collinear
/// overlaps and endpoint touches count as intersecting.
bool segments_intersect(const Point3& p, const Point3& q, const Point3& r,
                        const Point3& s);

/// True iff point t lies on the closed segment [p, q].
bool point_on_segment(const Point3& t, const Point3& p, const Point3& q);

/// True iff point t lies on the closed triangle (a, b, c).
bool point_on_triangle(const Point3& t, const Point3& a, const Point3& b,
                       const Point3& c);

/// Strict interior test against a tetrahedron; a point on the boundary raises
/// degenerate_error. Returns 0 (outside) or the orientation sign of the
/// tetrahedron (inside).
int point_in_tetrahedron(const Point3& t, const Point3& a, const Point3& b,
                         const Point3& c, const Point3& d,
                         GeneralPositionCertificate* cert = nullptr);

mpq_class parse_rational(const std::string& text);
std::string rational_to_string(const mpq_class& q);

}  // namespace embtop
