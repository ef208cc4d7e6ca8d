#include "cdt/geom.hpp"

#include <algorithm>

namespace cdt {

double SimplePolygon::signed_area() const {
    double s = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = vertices[i];
        const Point& q = vertices[(i + 1) % n];
        s += p.x * q.y - q.x * p.y;
    }
    return 0.5 * s;
}

Point SimplePolygon::centroid() const {
    // Area-weighted centroid; falls back to vertex mean for degenerate area.
    double a = 0.0, cx = 0.0, cy = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = vertices[i];
        const Point& q = vertices[(i + 1) % n];
        const double w = p.x * q.y - q.x * p.y;
        a += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    if (std::abs(a) < 1e-300) {
        Point m{0, 0};
        for (const Point& p : vertices) m = m + p;
        return m * (1.0 / static_cast<double>(n));
    }
    return {cx / (3.0 * a), cy / (3.0 * a)};
}

Polyline make_polyline(std::vector<Point> pts) {
    if (pts.empty()) throw InvalidInput("polyline needs at least one waypoint");
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const Point& p : pts) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw InvalidInput("polyline waypoint is not finite");
        if (out.empty() || !almost_equal(out.back(), p)) out.push_back(p);
    }
    return Polyline{std::move(out)};
}

double cost(const Polyline& p) {
    double c = 0.0;
    for (std::size_t i = 1; i < p.waypoints.size(); ++i)
        c += dist(p.waypoints[i - 1], p.waypoints[i]);
    return c;
}

Polyline concat(const Polyline& p1, const Polyline& p2) {
    if (p1.waypoints.empty() || p2.waypoints.empty())
        throw InvalidInput("concat of empty polyline");
    if (!almost_equal(p1.back(), p2.front()))
        throw EndpointMismatch("polyline product junction differs");
    std::vector<Point> pts = p1.waypoints;
    pts.insert(pts.end(), p2.waypoints.begin() + 1, p2.waypoints.end());
    if (pts.empty()) pts.push_back(p1.back());
    return make_polyline(std::move(pts));
}

Polyline reversed(const Polyline& p) {
    std::vector<Point> pts(p.waypoints.rbegin(), p.waypoints.rend());
    return Polyline{std::move(pts)};
}

namespace {

double clamp01(double t) { return std::clamp(t, 0.0, 1.0); }

}  // namespace

ViaPoint min_via_point(const Point& a, const Point& b, const Segment& s) {
    const Point d = s.b - s.a;
    const double len2 = dot(d, d);
    if (len2 <= kPointTol * kPointTol) return {0.0, s.a};
    const double len = std::sqrt(len2);

    const auto param_of = [&](const Point& p) { return dot(p - s.a, d) / len2; };
    // Signed distances of a and b from the supporting line.
    const double da = cross(d, a - s.a) / len;
    const double db = cross(d, b - s.a) / len;

    double t;
    if (std::abs(da) <= kPointTol && std::abs(db) <= kPointTol) {
        // Both on the line: any point of the overlap of [ta,tb] with [0,1]
        // is optimal; the clamped midpoint always lies in that overlap.
        t = 0.5 * (clamp01(param_of(a)) + clamp01(param_of(b)));
    } else if (std::abs(da) <= kPointTol) {
        t = clamp01(param_of(a));
    } else if (std::abs(db) <= kPointTol) {
        t = clamp01(param_of(b));
    } else {
        Point aa = a;
        if (da * db > 0.0) {
            // Same side: reflect a across the supporting line.
            const Point foot = s.a + d * param_of(a);
            aa = foot * 2.0 - a;
        }
        const double caa = cross(d, aa - s.a);
        const double cbb = cross(d, b - s.a);
        const double u = caa / (caa - cbb);
        const Point p = aa + (b - aa) * u;
        t = clamp01(param_of(p));
    }
    return {t, s.at(t)};
}

double point_segment_distance(const Point& q, const Point& a, const Point& b) {
    const Point d = b - a;
    const double len2 = dot(d, d);
    if (len2 <= 0.0) return dist(q, a);
    const double t = clamp01(dot(q - a, d) / len2);
    return dist(q, a + d * t);
}

PointSide point_in_polygon(const Point& q, const SimplePolygon& poly) {
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly.vertices[i];
        const Point& b = poly.vertices[(i + 1) % n];
        if (point_segment_distance(q, a, b) <= kPointTol) return PointSide::Boundary;
    }
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly.vertices[i];
        const Point& b = poly.vertices[(i + 1) % n];
        if ((a.y > q.y) != (b.y > q.y)) {
            const double xint = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (q.x < xint) inside = !inside;
        }
    }
    return inside ? PointSide::Inside : PointSide::Outside;
}

bool segments_properly_cross(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
    const double d1 = cross(p2 - p1, q1 - p1);
    const double d2 = cross(p2 - p1, q2 - p1);
    const double d3 = cross(q2 - q1, p1 - q1);
    const double d4 = cross(q2 - q1, p2 - q1);
    // Strict sign changes on both sides; touches and collinear overlaps do
    // not count as proper crossings.
    const double sp = norm(p2 - p1);
    const double sq = norm(q2 - q1);
    const double e1 = kPointTol * sp;
    const double e2 = kPointTol * sq;
    return ((d1 > e1 && d2 < -e1) || (d1 < -e1 && d2 > e1)) &&
           ((d3 > e2 && d4 < -e2) || (d3 < -e2 && d4 > e2));
}

ClipInterval clip_segment_convex(const Point& a, const Point& b, const std::vector<Point>& poly,
                                 double tol) {
    ClipInterval iv;
    iv.t_in = 0.0;
    iv.t_out = 1.0;
    iv.empty = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& ea = poly[i];
        const Point& eb = poly[(i + 1) % n];
        const Point e = eb - ea;
        const double elen = norm(e);
        if (elen <= kPointTol) continue;
        // Signed distance from the edge line; >= -tol counts as inside.
        const double f0 = cross(e, a - ea) / elen + tol;
        const double f1 = cross(e, b - ea) / elen + tol;
        if (f0 < 0.0 && f1 < 0.0) {
            iv.empty = true;
            return iv;
        }
        if (f0 >= 0.0 && f1 >= 0.0) continue;
        const double t = f0 / (f0 - f1);
        if (f0 < 0.0)
            iv.t_in = std::max(iv.t_in, t);
        else
            iv.t_out = std::min(iv.t_out, t);
    }
    if (iv.t_in > iv.t_out) iv.empty = true;
    return iv;
}

bool point_in_convex(const Point& q, const std::vector<Point>& poly, double tol) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& ea = poly[i];
        const Point& eb = poly[(i + 1) % n];
        const Point e = eb - ea;
        const double elen = norm(e);
        if (elen <= kPointTol) continue;
        if (cross(e, q - ea) / elen < -tol) return false;
    }
    return true;
}

BBox bbox_of(const std::vector<Point>& pts) {
    BBox box;
    if (pts.empty()) return box;
    box.min_x = box.max_x = pts[0].x;
    box.min_y = box.max_y = pts[0].y;
    for (const Point& p : pts) {
        box.min_x = std::min(box.min_x, p.x);
        box.max_x = std::max(box.max_x, p.x);
        box.min_y = std::min(box.min_y, p.y);
        box.max_y = std::max(box.max_y, p.y);
    }
    return box;
}

}  // namespace cdt
