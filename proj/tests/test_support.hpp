#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "cdt/encoding.hpp"
#include "cdt/planners.hpp"
#include "cdt/tcs.hpp"

namespace cdt {
namespace testing {

inline Environment square_env(double side = 3.0) {
    Environment env;
    env.name = "square";
    env.boundary.vertices = {{0, 0}, {side, 0}, {side, side}, {0, side}};
    return env;
}

// Hexagon with one reflex corner at (1,1).
inline Environment l_shape_env() {
    Environment env;
    env.name = "l-shape";
    env.boundary.vertices = {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
    return env;
}

// Square [0,3]^2 with the unit hole [1,2]^2.
inline Environment ring_env() {
    Environment env;
    env.name = "ring";
    env.boundary.vertices = {{0, 0}, {3, 0}, {3, 3}, {0, 3}};
    SimplePolygon hole;
    hole.vertices = {{1, 1}, {1, 2}, {2, 2}, {2, 1}};
    env.obstacles.push_back(hole);
    return env;
}

// Two separated square pillars in a wide hall.
inline Environment two_obstacle_env() {
    Environment env;
    env.name = "two-obstacle";
    env.boundary.vertices = {{0, 0}, {6, 0}, {6, 4}, {0, 4}};
    SimplePolygon a, b;
    a.vertices = {{1.2, 1.4}, {1.2, 2.6}, {2.2, 2.6}, {2.2, 1.4}};
    b.vertices = {{3.8, 1.4}, {3.8, 2.6}, {4.8, 2.6}, {4.8, 1.4}};
    env.obstacles.push_back(a);
    env.obstacles.push_back(b);
    return env;
}

// Wider L-shaped corridor, no holes.
inline Environment l_corridor_env() {
    Environment env;
    env.name = "l-corridor";
    env.boundary.vertices = {{0, 0}, {5, 0}, {5, 1.6}, {1.6, 1.6}, {1.6, 5}, {0, 5}};
    return env;
}

inline std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point& a, const Point& b) { return almost_equal(a, b); }),
              pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 1e-12) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 1e-12)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

// Square boundary with randomly placed convex obstacles, rejection-sampled
// for clearance. Free space is always connected.
inline Environment random_env(unsigned seed, int n_obstacles, double side = 10.0) {
    std::mt19937 rng(seed);
    Environment env;
    env.name = "random-" + std::to_string(seed);
    env.boundary.vertices = {{0, 0}, {side, 0}, {side, side}, {0, side}};

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double margin = 0.08 * side;
    int placed = 0;
    for (int attempt = 0; attempt < 400 && placed < n_obstacles; ++attempt) {
        const double r = side * (0.05 + 0.09 * unit(rng));
        const double cx = margin + r + unit(rng) * (side - 2 * (margin + r));
        const double cy = margin + r + unit(rng) * (side - 2 * (margin + r));
        const int k = 4 + static_cast<int>(unit(rng) * 4);
        std::vector<Point> pts;
        for (int i = 0; i < k; ++i) {
            const double ang = 2.0 * 3.14159265358979323846 * unit(rng);
            const double rad = r * (0.55 + 0.45 * unit(rng));
            pts.push_back({cx + rad * std::cos(ang), cy + rad * std::sin(ang)});
        }
        std::vector<Point> hull = convex_hull(pts);
        if (hull.size() < 3) continue;
        SimplePolygon poly;
        poly.vertices = hull;
        if (poly.area() < 0.2 * r * r) continue;
        bool ok = true;
        for (const auto& other : env.obstacles) {
            for (const Point& p : poly.vertices)
                for (std::size_t i = 0; ok && i < other.vertices.size(); ++i)
                    if (point_segment_distance(p, other.vertices[i],
                                               other.vertices[(i + 1) % other.vertices.size()]) <
                        margin)
                        ok = false;
            for (const Point& p : other.vertices)
                for (std::size_t i = 0; ok && i < poly.vertices.size(); ++i)
                    if (point_segment_distance(p, poly.vertices[i],
                                               poly.vertices[(i + 1) % poly.vertices.size()]) <
                        margin)
                        ok = false;
            if (!ok) break;
        }
        if (!ok) continue;
        env.obstacles.push_back(poly);
        ++placed;
    }
    return normalize_environment(std::move(env));
}

inline Point sample_in_cell(const DissectionGraph& g, CellId c, std::mt19937& rng) {
    const auto& v = g.cell(c).polygon.vertices;
    std::vector<double> areas;
    double total = 0.0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const double a = std::abs(cross(v[i] - v[0], v[i + 1] - v[0])) * 0.5;
        areas.push_back(a);
        total += a;
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double pick = unit(rng) * total;
    std::size_t tri = 0;
    while (tri + 1 < areas.size() && pick > areas[tri]) pick -= areas[tri++];
    double u = unit(rng), w = unit(rng);
    if (u + w > 1.0) {
        u = 1.0 - u;
        w = 1.0 - w;
    }
    const Point p = v[0] + (v[tri + 1] - v[0]) * u + (v[tri + 2] - v[0]) * w;
    // Pull slightly toward the centroid so samples are strictly interior.
    const Point centroid = g.cell(c).polygon.centroid();
    return centroid + (p - centroid) * 0.995;
}

inline Point random_free_point(const DissectionGraph& g, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(g.cells().size()) - 1);
    return sample_in_cell(g, pick(rng), rng);
}

// Random rollback-free walk on the dissection graph.
inline NodeSeq random_sequence(const DissectionGraph& g, std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> pick_cell(0, static_cast<int>(g.cells().size()) - 1);
    std::uniform_int_distribution<int> pick_len(1, max_len);
    NodeSeq seq{pick_cell(rng)};
    const int want = pick_len(rng);
    while (static_cast<int>(seq.size()) < want) {
        std::vector<CellId> options;
        for (CellId n : g.neighbors(seq.back()))
            if (seq.size() < 2 || n != seq[seq.size() - 2]) options.push_back(n);
        if (options.empty()) break;
        std::uniform_int_distribution<int> pick(0, static_cast<int>(options.size()) - 1);
        seq.push_back(options[static_cast<std::size_t>(pick(rng))]);
    }
    return seq;
}

inline Encoding random_encoding(const DissectionGraph& g, std::mt19937& rng, int max_len) {
    Encoding e;
    e.seq = random_sequence(g, rng, max_len);
    e.start = sample_in_cell(g, e.seq.front(), rng);
    e.end = sample_in_cell(g, e.seq.back(), rng);
    return e;
}

// A slack representative of the class of e: random interior points on each
// cutline plus random in-cell detours.
inline Polyline perturb_in_class(const DissectionGraph& g, const Encoding& e, std::mt19937& rng) {
    std::uniform_real_distribution<double> tpick(0.1, 0.9);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point> pts{e.start};
    for (std::size_t k = 1; k < e.seq.size(); ++k) {
        const Segment& cut = g.cutline_between(e.seq[k - 1], e.seq[k]).segment;
        pts.push_back(cut.at(tpick(rng)));
    }
    pts.push_back(e.end);
    // Insert detours: between consecutive points both in the closure of cell
    // e.seq[k], any interior point of that cell keeps the class.
    std::vector<Point> out;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        out.push_back(pts[i]);
        if (unit(rng) < 0.5) out.push_back(sample_in_cell(g, e.seq[i], rng));
    }
    out.push_back(pts.back());
    return make_polyline(std::move(out));
}

}  // namespace testing
}  // namespace cdt
