// Independent ground-truth generators for the property and acceptance
// suites: taut-string funnel over cutline portals, visibility-graph
// Dijkstra, and a grid homotopy-augmented-graph search keyed by ray-crossing
// h-signatures. None of these share solver code with the production path.

#include "cdt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <string>
#include <unordered_map>

namespace cdt {
namespace oracle {

namespace {

double area2(const Point& a, const Point& b, const Point& c) { return cross(b - a, c - a); }

}  // namespace

Polyline funnel_shortest(const DissectionGraph& g, const Encoding& e) {
    validate_encoding(g, e);
    if (e.seq.size() == 1) return make_polyline({e.start, e.end});

    struct Portal {
        Point left, right;
    };
    std::vector<Portal> portals;
    portals.reserve(e.seq.size() + 1);
    portals.push_back({e.start, e.start});
    for (std::size_t k = 1; k < e.seq.size(); ++k) {
        const Segment& s = g.cutline_between(e.seq[k - 1], e.seq[k]).segment;
        const Point dir =
            g.cell(e.seq[k]).polygon.centroid() - g.cell(e.seq[k - 1]).polygon.centroid();
        if (cross(dir, s.a - s.b) > 0.0)
            portals.push_back({s.a, s.b});
        else
            portals.push_back({s.b, s.a});
    }
    portals.push_back({e.end, e.end});

    const double scale = std::max(1.0, g.diameter());
    const double eps = 1e-12 * scale * scale;

    std::vector<Point> path{e.start};
    Point apex = e.start, left = e.start, right = e.start;
    std::size_t apex_idx = 0, left_idx = 0, right_idx = 0;

    for (std::size_t i = 1; i < portals.size(); ++i) {
        const Point& pl = portals[i].left;
        const Point& pr = portals[i].right;

        // Right side.
        if (area2(apex, right, pr) >= -eps) {
            if (almost_equal(apex, right) || area2(apex, left, pr) <= eps) {
                right = pr;
                right_idx = i;
            } else {
                // Right chain crossed over the left: the left point becomes
                // a path vertex; restart past it.
                path.push_back(left);
                apex = left;
                apex_idx = left_idx;
                left = right = apex;
                left_idx = right_idx = apex_idx;
                i = apex_idx;
                continue;
            }
        }
        // Left side.
        if (area2(apex, left, pl) <= eps) {
            if (almost_equal(apex, left) || area2(apex, right, pl) >= -eps) {
                left = pl;
                left_idx = i;
            } else {
                path.push_back(right);
                apex = right;
                apex_idx = right_idx;
                left = right = apex;
                left_idx = right_idx = apex_idx;
                i = apex_idx;
                continue;
            }
        }
    }
    path.push_back(e.end);
    return make_polyline(std::move(path));
}

// ---------------------------------------------------------------------------
// Visibility graph.

namespace {

struct Walls {
    std::vector<Segment> segments;
    std::vector<Point> vertices;
};

Walls collect_walls(const Environment& env) {
    Walls w;
    const auto add = [&](const SimplePolygon& poly) {
        const std::size_t n = poly.vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            w.segments.push_back({poly.vertices[i], poly.vertices[(i + 1) % n]});
            w.vertices.push_back(poly.vertices[i]);
        }
    };
    add(env.boundary);
    for (const auto& o : env.obstacles) add(o);
    return w;
}

bool point_in_free_closure(const Environment& env, const Point& q) {
    if (point_in_polygon(q, env.boundary) == PointSide::Outside) return false;
    for (const auto& o : env.obstacles)
        if (point_in_polygon(q, o) == PointSide::Inside) return false;
    return true;
}

bool segment_in_free_space(const Environment& env, const Walls& walls, const Point& u,
                           const Point& v) {
    for (const Segment& wall : walls.segments)
        if (segments_properly_cross(u, v, wall.a, wall.b)) return false;
    // Split at vertex touches and classify each open piece by its midpoint.
    const double len = dist(u, v);
    if (len <= kPointTol) return point_in_free_closure(env, u);
    std::vector<double> ts{0.0, 1.0};
    const Point d = v - u;
    const double len2 = dot(d, d);
    for (const Point& w : walls.vertices) {
        if (point_segment_distance(w, u, v) > kPointTol) continue;
        const double t = dot(w - u, d) / len2;
        if (t > 1e-12 && t < 1.0 - 1e-12) ts.push_back(t);
    }
    std::sort(ts.begin(), ts.end());
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        if (ts[i + 1] - ts[i] <= 1e-12) continue;
        const Point mid = u + d * (0.5 * (ts[i] + ts[i + 1]));
        if (!point_in_free_closure(env, mid)) return false;
    }
    return true;
}

}  // namespace

Polyline visibility_shortest(const Environment& env, const Point& a, const Point& b) {
    if (!point_in_free_closure(env, a) || !point_in_free_closure(env, b))
        throw InvalidInput("visibility query endpoint not in free space");
    if (almost_equal(a, b)) return make_polyline({a});

    const Walls walls = collect_walls(env);
    std::vector<Point> nodes{a, b};
    nodes.insert(nodes.end(), walls.vertices.begin(), walls.vertices.end());
    const std::size_t n = nodes.size();

    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (almost_equal(nodes[i], nodes[j])) continue;
            if (!segment_in_free_space(env, walls, nodes[i], nodes[j])) continue;
            const double w = dist(nodes[i], nodes[j]);
            adj[i].push_back({j, w});
            adj[j].push_back({i, w});
        }
    }

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist_to(n, kInf);
    std::vector<std::size_t> prev(n, n);
    using QItem = std::pair<double, std::size_t>;
    std::priority_queue<QItem, std::vector<QItem>, std::greater<>> pq;
    dist_to[0] = 0.0;
    pq.push({0.0, 0});
    while (!pq.empty()) {
        const auto [d, u] = pq.top();
        pq.pop();
        if (d > dist_to[u]) continue;
        if (u == 1) break;
        for (const auto& [v, w] : adj[u]) {
            if (d + w < dist_to[v]) {
                dist_to[v] = d + w;
                prev[v] = u;
                pq.push({dist_to[v], v});
            }
        }
    }
    if (dist_to[1] == kInf) throw NoPath("visibility graph disconnected");

    std::vector<Point> rev;
    for (std::size_t u = 1; u != n; u = prev[u]) {
        rev.push_back(nodes[u]);
        if (u == 0) break;
    }
    std::reverse(rev.begin(), rev.end());
    return make_polyline(std::move(rev));
}

// ---------------------------------------------------------------------------
// h-signatures: signed crossings of one downward ray per obstacle.

namespace {

std::vector<double> obstacle_rays(const Environment& env, const Polyline* p) {
    std::vector<double> rays;
    for (const auto& obs : env.obstacles) {
        double rx = obs.centroid().x;
        const auto clashes = [&](double x) {
            for (const Point& v : env.boundary.vertices)
                if (std::abs(v.x - x) <= 1e-12) return true;
            for (const auto& o : env.obstacles)
                for (const Point& v : o.vertices)
                    if (std::abs(v.x - x) <= 1e-12) return true;
            if (p)
                for (const Point& v : p->waypoints)
                    if (std::abs(v.x - x) <= 1e-12) return true;
            return false;
        };
        while (clashes(rx)) rx += 1e-7;
        rays.push_back(rx);
    }
    return rays;
}

void append_reduced(std::vector<int>& word, int letter) {
    if (!word.empty() && word.back() == -letter)
        word.pop_back();
    else
        word.push_back(letter);
}

// Signed crossing letters of segment u->v against the obstacle rays, in
// traversal order.
void segment_letters(const Environment& env, const std::vector<double>& rays, const Point& u,
                     const Point& v, std::vector<std::pair<double, int>>& out) {
    out.clear();
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const double rx = rays[i];
        const double cy = env.obstacles[i].centroid().y;
        const bool straddles = (u.x < rx && v.x > rx) || (u.x > rx && v.x < rx);
        if (!straddles) continue;
        const double t = (rx - u.x) / (v.x - u.x);
        const double y = u.y + t * (v.y - u.y);
        if (y >= cy) continue;
        const int letter = (v.x > u.x) ? static_cast<int>(i) + 1 : -(static_cast<int>(i) + 1);
        out.push_back({t, letter});
    }
    std::sort(out.begin(), out.end());
}

}  // namespace

HSignature h_signature(const Environment& env, const Polyline& p) {
    const std::vector<double> rays = obstacle_rays(env, &p);
    HSignature sig;
    std::vector<std::pair<double, int>> letters;
    for (std::size_t k = 1; k < p.waypoints.size(); ++k) {
        segment_letters(env, rays, p.waypoints[k - 1], p.waypoints[k], letters);
        for (const auto& [t, letter] : letters) append_reduced(sig.word, letter);
    }
    return sig;
}

// ---------------------------------------------------------------------------
// Grid homotopy-augmented graph.

namespace {

struct Grid {
    BBox box;
    double res = 0.0;
    int nx = 0, ny = 0;
    std::vector<char> free_cell;

    int index(int ix, int iy) const { return iy * nx + ix; }
    Point center(int idx) const {
        const int ix = idx % nx;
        const int iy = idx / nx;
        return {box.min_x + (ix + 0.5) * res, box.min_y + (iy + 0.5) * res};
    }
};

}  // namespace

std::vector<GridHagClass> grid_hag_configs(const Environment& env, const Point& anchor,
                                           double tether, const Point& goal, double resolution,
                                           double slack) {
    std::vector<Point> all = env.boundary.vertices;
    for (const auto& o : env.obstacles)
        all.insert(all.end(), o.vertices.begin(), o.vertices.end());
    const BBox box = bbox_of(all);
    if (resolution <= 0.0) resolution = box.diagonal() / 200.0;

    Grid grid;
    grid.box = box;
    grid.res = resolution;
    grid.nx = std::max(1, static_cast<int>(std::ceil((box.max_x - box.min_x) / resolution)));
    grid.ny = std::max(1, static_cast<int>(std::ceil((box.max_y - box.min_y) / resolution)));
    grid.free_cell.assign(static_cast<std::size_t>(grid.nx) * grid.ny, 0);

    const Walls walls = collect_walls(env);
    for (int iy = 0; iy < grid.ny; ++iy)
        for (int ix = 0; ix < grid.nx; ++ix) {
            const int idx = grid.index(ix, iy);
            grid.free_cell[static_cast<std::size_t>(idx)] =
                point_in_free_closure(env, grid.center(idx)) ? 1 : 0;
        }

    const auto snap = [&](const Point& q, const char* what) {
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (int idx = 0; idx < grid.nx * grid.ny; ++idx) {
            if (!grid.free_cell[static_cast<std::size_t>(idx)]) continue;
            const Point c = grid.center(idx);
            const double d = dist(q, c);
            if (d >= best_d || d > 2.0 * resolution) continue;
            if (!segment_in_free_space(env, walls, q, c)) continue;
            best = idx;
            best_d = d;
        }
        if (best < 0)
            throw ResolutionTooCoarse(std::string(what) + " does not snap to a free grid cell");
        return best;
    };
    const int start_idx = snap(anchor, "anchor");
    const int goal_idx = snap(goal, "goal");

    const std::vector<double> rays = obstacle_rays(env, nullptr);

    // States are (grid cell, reduced word). Words are interned.
    std::map<std::vector<int>, int> word_ids;
    std::vector<std::vector<int>> words;
    const auto intern = [&](const std::vector<int>& w) {
        auto [it, inserted] = word_ids.try_emplace(w, static_cast<int>(words.size()));
        if (inserted) words.push_back(w);
        return it->second;
    };
    const int empty_word = intern({});

    const auto state_key = [](int cell, int word) {
        return (static_cast<std::uint64_t>(cell) << 20) | static_cast<std::uint64_t>(word);
    };

    const double bound = tether * (1.0 + slack) + 4.0 * resolution;

    std::unordered_map<std::uint64_t, double> dist_to;
    std::unordered_map<std::uint64_t, std::uint64_t> pred;
    using QItem = std::pair<double, std::uint64_t>;
    std::priority_queue<QItem, std::vector<QItem>, std::greater<>> pq;

    const std::uint64_t s0 = state_key(start_idx, empty_word);
    dist_to[s0] = 0.0;
    pq.push({0.0, s0});

    const int dxs[] = {1, 1, 0, -1, -1, -1, 0, 1};
    const int dys[] = {0, 1, 1, 1, 0, -1, -1, -1};
    std::vector<std::pair<double, int>> letters;

    while (!pq.empty()) {
        const auto [d, key] = pq.top();
        pq.pop();
        if (d > dist_to[key] || d > bound) continue;
        const int cell = static_cast<int>(key >> 20);
        const int word = static_cast<int>(key & 0xfffff);
        const int ix = cell % grid.nx;
        const int iy = cell / grid.nx;
        const Point from = grid.center(cell);
        for (int m = 0; m < 8; ++m) {
            const int jx = ix + dxs[m];
            const int jy = iy + dys[m];
            if (jx < 0 || jx >= grid.nx || jy < 0 || jy >= grid.ny) continue;
            const int ncell = grid.index(jx, jy);
            if (!grid.free_cell[static_cast<std::size_t>(ncell)]) continue;
            const Point to = grid.center(ncell);
            const double nd = d + dist(from, to);
            if (nd > bound) continue;
            bool blocked = false;
            for (const Segment& wall : walls.segments)
                if (segments_properly_cross(from, to, wall.a, wall.b)) {
                    blocked = true;
                    break;
                }
            if (blocked) continue;
            std::vector<int> w = words[static_cast<std::size_t>(word)];
            segment_letters(env, rays, from, to, letters);
            for (const auto& [t, letter] : letters) append_reduced(w, letter);
            const std::uint64_t nkey = state_key(ncell, intern(w));
            auto it = dist_to.find(nkey);
            if (it == dist_to.end() || nd < it->second) {
                dist_to[nkey] = nd;
                pred[nkey] = key;
                pq.push({nd, nkey});
            }
        }
    }

    std::vector<GridHagClass> classes;
    std::vector<std::pair<double, int>> stub;
    for (const auto& [key, d] : dist_to) {
        if (static_cast<int>(key >> 20) != goal_idx) continue;
        if (d > tether * (1.0 + slack)) continue;

        GridHagClass cls;
        cls.approx_cost = d + dist(anchor, grid.center(start_idx)) +
                          dist(grid.center(goal_idx), goal);

        std::vector<Point> chain;
        std::uint64_t cur = key;
        while (true) {
            chain.push_back(grid.center(static_cast<int>(cur >> 20)));
            if (cur == s0) break;
            cur = pred.at(cur);
        }
        std::reverse(chain.begin(), chain.end());
        std::vector<Point> rep{anchor};
        rep.insert(rep.end(), chain.begin(), chain.end());
        rep.push_back(goal);
        cls.representative = make_polyline(std::move(rep));

        // Report the signature of the whole representative, stubs included.
        std::vector<int> w;
        segment_letters(env, rays, anchor, grid.center(start_idx), stub);
        for (const auto& [t, letter] : stub) append_reduced(w, letter);
        for (int letter : words[static_cast<std::size_t>(key & 0xfffff)]) append_reduced(w, letter);
        segment_letters(env, rays, grid.center(goal_idx), goal, stub);
        for (const auto& [t, letter] : stub) append_reduced(w, letter);
        cls.signature.word = std::move(w);

        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const GridHagClass& a, const GridHagClass& b) {
        return a.signature.word < b.signature.word;
    });
    return classes;
}

}  // namespace oracle
}  // namespace cdt
