#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "cdt/errors.hpp"

namespace cdt {

// Point coincidence tolerance, in map units.
inline constexpr double kPointTol = 1e-9;
// Collinearity tolerance on normalized cross products.
inline constexpr double kCollinearTol = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::sqrt(a.x * a.x + a.y * a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

inline bool almost_equal(Point a, Point b, double tol = kPointTol) {
    return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}

struct Segment {
    Point a;
    Point b;

    Point at(double t) const { return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t}; }
    Point midpoint() const { return at(0.5); }
    double length() const { return dist(a, b); }
};

struct SimplePolygon {
    std::vector<Point> vertices;

    double signed_area() const;
    double area() const { return std::abs(signed_area()); }
    bool is_ccw() const { return signed_area() > 0.0; }
    Point centroid() const;
};

// Piecewise-linear path. A single waypoint is the constant path.
struct Polyline {
    std::vector<Point> waypoints;

    bool is_constant() const { return waypoints.size() <= 1; }
    const Point& front() const { return waypoints.front(); }
    const Point& back() const { return waypoints.back(); }
    std::size_t size() const { return waypoints.size(); }
};

// Builds a polyline, deleting consecutive duplicate waypoints (within
// kPointTol). Collinear interior waypoints are retained.
Polyline make_polyline(std::vector<Point> pts);

double cost(const Polyline& p);

// Product of paths. Junction points must coincide within kPointTol.
Polyline concat(const Polyline& p1, const Polyline& p2);

Polyline reversed(const Polyline& p);

struct ViaPoint {
    double t = 0.0;
    Point x;
};

// Closed-form minimizer of |a - s(t)| + |s(t) - b| over t in [0,1]:
// reflect a across the supporting line of s, intersect with the segment,
// clamp. Degenerate inputs (a or b on the supporting line) fall back to
// direct parameter clamping.
ViaPoint min_via_point(const Point& a, const Point& b, const Segment& s);

enum class PointSide { Inside, Boundary, Outside };

// Crossing-number classification with the boundary detected within kPointTol.
PointSide point_in_polygon(const Point& q, const SimplePolygon& poly);

// ---- shared low-level predicates ----

double point_segment_distance(const Point& q, const Point& a, const Point& b);

// Strict transversal crossing of the open interiors of two segments.
bool segments_properly_cross(const Point& p1, const Point& p2, const Point& q1, const Point& q2);

struct ClipInterval {
    double t_in = 0.0;
    double t_out = 1.0;
    bool empty = true;
};

// Cyrus-Beck clip of segment a->b against a convex CCW polygon closure.
// `tol` widens the polygon by that distance.
ClipInterval clip_segment_convex(const Point& a, const Point& b, const std::vector<Point>& poly,
                                 double tol);

bool point_in_convex(const Point& q, const std::vector<Point>& poly, double tol);

struct BBox {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;

    bool contains(const Point& p, double tol) const {
        return p.x >= min_x - tol && p.x <= max_x + tol && p.y >= min_y - tol &&
               p.y <= max_y + tol;
    }
    double diagonal() const {
        const double dx = max_x - min_x;
        const double dy = max_y - min_y;
        return std::sqrt(dx * dx + dy * dy);
    }
};

BBox bbox_of(const std::vector<Point>& pts);

}  // namespace cdt
