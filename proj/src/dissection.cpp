// Convex dissection of a polygon-with-holes free space.
//
// Pipeline: splice holes into the outer ring with bridge edges (rightmost
// hole vertex toward +x, Eberly's visibility construction), ear-clip the
// resulting weakly simple ring into triangles, then merge triangles across
// inessential diagonals (Hertel-Mehlhorn). No Steiner points are introduced,
// so every cell vertex is an environment vertex. The surviving internal
// diagonals are the cutlines.

#include "cdt/dissection.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <sstream>
#include <utility>

namespace cdt {

namespace {

std::string point_str(const Point& p) {
    std::ostringstream os;
    os << "(" << p.x << "," << p.y << ")";
    return os.str();
}

bool finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

void check_simple_polygon(const SimplePolygon& poly, const std::string& what) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    if (n < 3) throw InvalidEnvironment(what + " has fewer than 3 vertices");
    for (const Point& p : v)
        if (!finite(p)) throw InvalidEnvironment(what + " has non-finite vertex");
    for (std::size_t i = 0; i < n; ++i)
        if (almost_equal(v[i], v[(i + 1) % n]))
            throw InvalidEnvironment(what + " has duplicate consecutive vertices");
    if (poly.area() <= kPointTol)
        throw InvalidEnvironment(what + " has (near) zero area");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segments_properly_cross(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
                throw InvalidEnvironment(what + " self-intersects");
        }
    }
    // Pinches: a vertex resting on a non-incident edge.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || (j + 1) % n == i) continue;
            if (point_segment_distance(v[i], v[j], v[(j + 1) % n]) <= kPointTol)
                throw InvalidEnvironment(what + " touches itself at " + point_str(v[i]));
        }
    }
}

void check_contour_separation(const SimplePolygon& a, const SimplePolygon& b,
                              const std::string& what) {
    const std::size_t na = a.vertices.size();
    const std::size_t nb = b.vertices.size();
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            if (segments_properly_cross(a.vertices[i], a.vertices[(i + 1) % na], b.vertices[j],
                                        b.vertices[(j + 1) % nb]))
                throw InvalidEnvironment(what + " (contours cross)");
        }
    }
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            if (point_segment_distance(a.vertices[i], b.vertices[j], b.vertices[(j + 1) % nb]) <=
                kPointTol)
                throw InvalidEnvironment(what + " (contours touch at " +
                                         point_str(a.vertices[i]) + ")");
}

// ---------------------------------------------------------------------------
// Ear clipping over a doubly linked vertex ring.

struct RingNode {
    int vidx = -1;   // index into the vertex pool
    int prev = -1;
    int next = -1;
    bool alive = false;
};

class Ring {
public:
    explicit Ring(const std::vector<Point>& pool) : pool_(pool) {}

    int add(int vidx) {
        nodes_.push_back({vidx, -1, -1, true});
        return static_cast<int>(nodes_.size()) - 1;
    }

    // Builds a circular list from vertex indices, returns the first node.
    int build(const std::vector<int>& vidxs) {
        const int base = static_cast<int>(nodes_.size());
        const int n = static_cast<int>(vidxs.size());
        for (int i = 0; i < n; ++i) add(vidxs[i]);
        for (int i = 0; i < n; ++i) {
            nodes_[base + i].prev = base + (i + n - 1) % n;
            nodes_[base + i].next = base + (i + 1) % n;
        }
        return base;
    }

    RingNode& at(int i) { return nodes_[i]; }
    const RingNode& at(int i) const { return nodes_[i]; }
    const Point& pt(int node) const { return pool_[nodes_[node].vidx]; }

    void link(int a, int b) {
        nodes_[a].next = b;
        nodes_[b].prev = a;
    }

    void remove(int node) {
        link(nodes_[node].prev, nodes_[node].next);
        nodes_[node].alive = false;
    }

    std::size_t count() const { return nodes_.size(); }

private:
    const std::vector<Point>& pool_;
    std::vector<RingNode> nodes_;
};

double tri_area2(const Point& a, const Point& b, const Point& c) {
    return cross(b - a, c - a);
}

bool point_in_triangle_eps(const Point& p, const Point& a, const Point& b, const Point& c,
                           double eps) {
    return tri_area2(a, b, p) >= -eps && tri_area2(b, c, p) >= -eps &&
           tri_area2(c, a, p) >= -eps;
}

struct Triangulator {
    const std::vector<Point>& pool;
    Ring ring;
    double area_eps;  // absolute tolerance on doubled triangle areas

    explicit Triangulator(const std::vector<Point>& vertex_pool, double scale)
        : pool(vertex_pool), ring(vertex_pool), area_eps(1e-12 * scale * scale) {}

    bool is_reflex(int node) const {
        const Point& a = ring.pt(ring.at(node).prev);
        const Point& b = ring.pt(node);
        const Point& c = ring.pt(ring.at(node).next);
        return tri_area2(a, b, c) < area_eps;
    }

    bool is_ear(int node, int head, std::size_t live) const {
        const int pn = ring.at(node).prev;
        const int nn = ring.at(node).next;
        const Point& a = ring.pt(pn);
        const Point& b = ring.pt(node);
        const Point& c = ring.pt(nn);
        if (tri_area2(a, b, c) <= area_eps) return false;
        int it = ring.at(nn).next;
        for (std::size_t k = 3; k < live; ++k, it = ring.at(it).next) {
            const Point& p = ring.pt(it);
            if (almost_equal(p, a) || almost_equal(p, b) || almost_equal(p, c)) continue;
            if (!is_reflex(it)) continue;
            if (point_in_triangle_eps(p, a, b, c, area_eps)) return false;
        }
        (void)head;
        return true;
    }

    std::vector<std::array<int, 3>> clip(int head, std::size_t live) {
        std::vector<std::array<int, 3>> tris;
        int node = head;
        std::size_t since_last_clip = 0;
        while (live > 3) {
            if (is_ear(node, head, live)) {
                const int pn = ring.at(node).prev;
                const int nn = ring.at(node).next;
                tris.push_back({ring.at(pn).vidx, ring.at(node).vidx, ring.at(nn).vidx});
                ring.remove(node);
                node = nn;
                --live;
                since_last_clip = 0;
            } else {
                node = ring.at(node).next;
                if (++since_last_clip > live + 1)
                    throw InternalError("ear clipping stalled; input polygon is degenerate");
            }
        }
        const int pn = ring.at(node).prev;
        const int nn = ring.at(node).next;
        tris.push_back({ring.at(pn).vidx, ring.at(node).vidx, ring.at(nn).vidx});
        return tris;
    }
};

// Whether direction d from ring node `node` points into the polygon
// interior (ring is CCW, interior on the left of directed edges).
bool locally_inside(const Ring& ring, int node, const Point& d, double eps) {
    const Point& a = ring.pt(ring.at(node).prev);
    const Point& b = ring.pt(node);
    const Point& c = ring.pt(ring.at(node).next);
    const double c1 = cross(b - a, d);
    const double c2 = cross(c - b, d);
    if (tri_area2(a, b, c) >= 0.0) return c1 > -eps && c2 > -eps;  // convex corner
    return c1 > eps || c2 > eps;                                   // reflex corner
}

// Finds the ring node visible from hole vertex m (rightward ray cast plus
// the reflex-in-triangle refinement).
int find_bridge_node(Ring& ring, int head, std::size_t live, const Point& m) {
    double best_x = std::numeric_limits<double>::infinity();
    int hit_edge_a = -1;
    int node = head;
    for (std::size_t k = 0; k < live; ++k, node = ring.at(node).next) {
        const Point& a = ring.pt(node);
        const Point& b = ring.pt(ring.at(node).next);
        const bool straddles = (a.y <= m.y && m.y < b.y) || (b.y <= m.y && m.y < a.y);
        if (!straddles) continue;
        const double xi = a.x + (m.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if (xi >= m.x - kPointTol && xi < best_x) {
            best_x = xi;
            hit_edge_a = node;
        }
    }
    if (hit_edge_a < 0) throw InternalError("hole bridge ray found no boundary edge");

    const Point isect{best_x, m.y};
    const int na = hit_edge_a;
    const int nb = ring.at(hit_edge_a).next;

    int pnode;
    if (almost_equal(ring.pt(na), isect))
        pnode = na;
    else if (almost_equal(ring.pt(nb), isect))
        pnode = nb;
    else
        // Candidate endpoint: the one further along the ray.
        pnode = (ring.pt(na).x > ring.pt(nb).x ||
                 (ring.pt(na).x == ring.pt(nb).x && ring.pt(na).y > ring.pt(nb).y))
                    ? na
                    : nb;
    const Point scale_ref = ring.pt(pnode) - m;
    const double eps = 1e-12 * std::max(1.0, dot(scale_ref, scale_ref));

    // Reflex vertices inside triangle (m, isect, p) may occlude p; take the
    // one minimizing the angle with the ray (ties: closest).
    int best = pnode;
    double best_tan = std::numeric_limits<double>::infinity();
    {
        const Point& p = ring.pt(pnode);
        if (p.x > m.x) best_tan = std::abs(p.y - m.y) / (p.x - m.x);
    }
    node = head;
    for (std::size_t k = 0; k < live; ++k, node = ring.at(node).next) {
        if (node == pnode) continue;
        const Point& p = ring.pt(node);
        if (p.x <= m.x + kPointTol) continue;
        if (almost_equal(p, m) || almost_equal(p, isect) || almost_equal(p, ring.pt(pnode)))
            continue;
        const Point& pa = ring.pt(ring.at(node).prev);
        const Point& pc = ring.pt(ring.at(node).next);
        if (tri_area2(pa, p, pc) >= eps) continue;  // only reflex vertices occlude
        if (!locally_inside(ring, node, m - p, eps)) continue;
        // Triangle orientation depends on which side p lies; test both.
        if (!point_in_triangle_eps(p, m, ring.pt(pnode), isect, eps) &&
            !point_in_triangle_eps(p, m, isect, ring.pt(pnode), eps))
            continue;
        const double tan = std::abs(p.y - m.y) / (p.x - m.x);
        if (tan < best_tan - 1e-15 ||
            (std::abs(tan - best_tan) <= 1e-15 && dist(p, m) < dist(ring.pt(best), m))) {
            best = node;
            best_tan = tan;
        }
    }

    // Coordinates can occur at several ring nodes after earlier splices; the
    // bridge must attach to the copy whose interior wedge faces m.
    const Point target = ring.pt(best);
    if (!locally_inside(ring, best, m - target, eps)) {
        node = head;
        for (std::size_t k = 0; k < live; ++k, node = ring.at(node).next) {
            if (node == best || !almost_equal(ring.pt(node), target)) continue;
            if (locally_inside(ring, node, m - target, eps)) return node;
        }
    }
    return best;
}

// Removes exactly collinear vertices; they carry no geometry and would break
// the no-Steiner-vertex assumptions of the merger.
std::vector<Point> filter_collinear(const std::vector<Point>& v, double scale) {
    const double eps = 1e-12 * scale * scale;
    std::vector<Point> out;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[(i + n - 1) % n];
        const Point& b = v[i];
        const Point& c = v[(i + 1) % n];
        if (std::abs(tri_area2(a, b, c)) > eps) out.push_back(b);
    }
    return out.size() >= 3 ? out : v;
}

std::uint64_t edge_key(int u, int v) {
    const std::uint32_t lo = static_cast<std::uint32_t>(std::min(u, v));
    const std::uint32_t hi = static_cast<std::uint32_t>(std::max(u, v));
    return (static_cast<std::uint64_t>(hi) << 32) | lo;
}

bool lex_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

// Merges face f2 into f1 across the shared directed edge u->v of f1. Returns
// an empty vector when the merge would be non-simple or non-convex.
std::vector<int> try_merge(const std::vector<Point>& pool, const std::vector<int>& f1,
                           const std::vector<int>& f2, int u, int v) {
    const int n1 = static_cast<int>(f1.size());
    const int n2 = static_cast<int>(f2.size());
    int i = -1;
    for (int k = 0; k < n1; ++k)
        if (f1[k] == u && f1[(k + 1) % n1] == v) {
            i = k;
            break;
        }
    if (i < 0) return {};
    int j = -1;
    for (int k = 0; k < n2; ++k)
        if (f2[k] == v && f2[(k + 1) % n2] == u) {
            j = k;
            break;
        }
    if (j < 0) return {};

    std::vector<int> merged;
    merged.reserve(f1.size() + f2.size() - 2);
    // Walk f1 from v around to u, then f2's interior chain from after u to
    // before v.
    for (int k = (i + 1) % n1; k != i; k = (k + 1) % n1) merged.push_back(f1[k]);
    merged.push_back(f1[i]);  // u
    for (int k = (j + 2) % n2; k != j; k = (k + 1) % n2) merged.push_back(f2[k]);

    std::vector<int> sorted = merged;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {};

    const int n = static_cast<int>(merged.size());
    for (int k = 0; k < n; ++k) {
        const Point& a = pool[merged[(k + n - 1) % n]];
        const Point& b = pool[merged[k]];
        const Point& c = pool[merged[(k + 1) % n]];
        const Point e1 = b - a;
        const Point e2 = c - b;
        const double denom = norm(e1) * norm(e2);
        if (denom <= 0.0) return {};
        if (cross(e1, e2) / denom < -kCollinearTol) return {};
    }
    return merged;
}

}  // namespace

Environment normalize_environment(Environment env) {
    auto dedupe_closing = [](SimplePolygon& p) {
        if (p.vertices.size() >= 2 && almost_equal(p.vertices.front(), p.vertices.back()))
            p.vertices.pop_back();
    };
    dedupe_closing(env.boundary);
    if (env.boundary.vertices.size() >= 3 && !env.boundary.is_ccw())
        std::reverse(env.boundary.vertices.begin(), env.boundary.vertices.end());
    for (auto& obs : env.obstacles) {
        dedupe_closing(obs);
        if (obs.vertices.size() >= 3 && obs.is_ccw())
            std::reverse(obs.vertices.begin(), obs.vertices.end());
    }
    return env;
}

void validate_environment(const Environment& env) {
    check_simple_polygon(env.boundary, "boundary");
    if (!env.boundary.is_ccw()) throw InvalidEnvironment("boundary is not CCW");
    for (std::size_t i = 0; i < env.obstacles.size(); ++i) {
        const std::string what = "obstacle " + std::to_string(i);
        check_simple_polygon(env.obstacles[i], what);
        if (env.obstacles[i].is_ccw()) throw InvalidEnvironment(what + " is not CW");
        for (const Point& p : env.obstacles[i].vertices)
            if (point_in_polygon(p, env.boundary) != PointSide::Inside)
                throw InvalidEnvironment(what + " is not strictly inside the boundary");
        check_contour_separation(env.obstacles[i], env.boundary, what + " vs boundary");
        check_contour_separation(env.boundary, env.obstacles[i], what + " vs boundary");
    }
    for (std::size_t i = 0; i < env.obstacles.size(); ++i) {
        for (std::size_t j = i + 1; j < env.obstacles.size(); ++j) {
            const std::string what =
                "obstacles " + std::to_string(i) + " and " + std::to_string(j);
            check_contour_separation(env.obstacles[i], env.obstacles[j], what);
            check_contour_separation(env.obstacles[j], env.obstacles[i], what);
            for (const Point& p : env.obstacles[i].vertices)
                if (point_in_polygon(p, env.obstacles[j]) == PointSide::Inside)
                    throw InvalidEnvironment(what + " are nested");
            for (const Point& p : env.obstacles[j].vertices)
                if (point_in_polygon(p, env.obstacles[i]) == PointSide::Inside)
                    throw InvalidEnvironment(what + " are nested");
        }
    }
}

DissectionGraph dissect(const Environment& env) {
    validate_environment(env);

    std::vector<Point> all_pts = env.boundary.vertices;
    for (const auto& o : env.obstacles)
        all_pts.insert(all_pts.end(), o.vertices.begin(), o.vertices.end());
    const BBox bounds = bbox_of(all_pts);
    const double scale = std::max(1.0, bounds.diagonal());

    // Vertex pool: boundary first, then holes, collinear vertices dropped.
    std::vector<Point> pool;
    std::vector<int> outer_idx;
    for (const Point& p : filter_collinear(env.boundary.vertices, scale)) {
        outer_idx.push_back(static_cast<int>(pool.size()));
        pool.push_back(p);
    }
    struct Hole {
        std::vector<int> idx;
        double max_x = -std::numeric_limits<double>::infinity();
        double max_y = -std::numeric_limits<double>::infinity();
        int rightmost = 0;
    };
    std::vector<Hole> holes;
    for (const auto& obs : env.obstacles) {
        Hole h;
        const auto verts = filter_collinear(obs.vertices, scale);
        for (const Point& p : verts) {
            h.idx.push_back(static_cast<int>(pool.size()));
            pool.push_back(p);
        }
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const Point& p = verts[i];
            if (p.x > h.max_x || (p.x == h.max_x && p.y > h.max_y)) {
                h.max_x = p.x;
                h.max_y = p.y;
                h.rightmost = static_cast<int>(i);
            }
        }
        holes.push_back(std::move(h));
    }
    std::stable_sort(holes.begin(), holes.end(), [](const Hole& a, const Hole& b) {
        if (a.max_x != b.max_x) return a.max_x > b.max_x;
        return a.max_y > b.max_y;
    });

    Triangulator tri(pool, scale);
    int head = tri.ring.build(outer_idx);
    std::size_t live = outer_idx.size();

    for (const Hole& h : holes) {
        const int m_pool = h.idx[static_cast<std::size_t>(h.rightmost)];
        const Point& m = pool[m_pool];
        const int pnode = find_bridge_node(tri.ring, head, live, m);

        // Hole nodes in stored (CW) order starting at the rightmost vertex.
        const int nh = static_cast<int>(h.idx.size());
        std::vector<int> hole_nodes(static_cast<std::size_t>(nh));
        for (int k = 0; k < nh; ++k)
            hole_nodes[static_cast<std::size_t>(k)] =
                tri.ring.add(h.idx[static_cast<std::size_t>((h.rightmost + k) % nh)]);
        const int m2 = tri.ring.add(m_pool);
        const int p2 = tri.ring.add(tri.ring.at(pnode).vidx);

        const int after = tri.ring.at(pnode).next;
        tri.ring.link(pnode, hole_nodes.front());
        for (int k = 0; k + 1 < nh; ++k) tri.ring.link(hole_nodes[k], hole_nodes[k + 1]);
        tri.ring.link(hole_nodes.back(), m2);
        tri.ring.link(m2, p2);
        tri.ring.link(p2, after);
        live += static_cast<std::size_t>(nh) + 2;
        head = pnode;
    }

    std::vector<std::array<int, 3>> triangles = tri.clip(head, live);

    // Hertel-Mehlhorn: drop inessential diagonals by merging, deterministic
    // edge order, repeated until fixpoint.
    std::vector<std::vector<int>> faces;
    faces.reserve(triangles.size());
    for (const auto& t : triangles) faces.push_back({t[0], t[1], t[2]});
    std::vector<bool> alive(faces.size(), true);

    bool changed = true;
    while (changed) {
        changed = false;
        std::map<std::uint64_t, std::vector<int>> edge_faces;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (!alive[f]) continue;
            const auto& cyc = faces[f];
            for (std::size_t k = 0; k < cyc.size(); ++k)
                edge_faces[edge_key(cyc[k], cyc[(k + 1) % cyc.size()])].push_back(
                    static_cast<int>(f));
        }
        for (const auto& [key, fs] : edge_faces) {
            if (fs.size() != 2) continue;
            int f1 = fs[0], f2 = fs[1];
            if (!alive[f1] || !alive[f2]) continue;
            const int u = static_cast<int>(key & 0xffffffffu);
            const int v = static_cast<int>(key >> 32);
            std::vector<int> merged = try_merge(pool, faces[f1], faces[f2], u, v);
            if (merged.empty()) merged = try_merge(pool, faces[f1], faces[f2], v, u);
            if (merged.empty()) continue;
            faces[f1] = std::move(merged);
            alive[f2] = false;
            changed = true;
        }
    }

    // Canonical cells: rotate each cycle to its lexicographically smallest
    // vertex, order cells by their vertex lists.
    std::vector<std::vector<int>> cell_cycles;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (!alive[f]) continue;
        std::vector<int>& cyc = faces[f];
        std::size_t start = 0;
        for (std::size_t k = 1; k < cyc.size(); ++k)
            if (lex_less(pool[cyc[k]], pool[cyc[start]])) start = k;
        std::rotate(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(start), cyc.end());
        cell_cycles.push_back(cyc);
    }
    std::sort(cell_cycles.begin(), cell_cycles.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                  const std::size_t n = std::min(a.size(), b.size());
                  for (std::size_t k = 0; k < n; ++k) {
                      if (lex_less(pool[a[k]], pool[b[k]])) return true;
                      if (lex_less(pool[b[k]], pool[a[k]])) return false;
                  }
                  return a.size() < b.size();
              });

    DissectionGraph g;
    g.env_ = env;
    g.bounds_ = bounds;
    g.diameter_ = bounds.diagonal();

    for (std::size_t c = 0; c < cell_cycles.size(); ++c) {
        ConvexCell cell;
        cell.id = static_cast<CellId>(c);
        for (int vi : cell_cycles[c]) cell.polygon.vertices.push_back(pool[vi]);
        g.cells_.push_back(std::move(cell));
    }

    std::map<std::uint64_t, std::vector<CellId>> edge_cells;
    for (std::size_t c = 0; c < cell_cycles.size(); ++c) {
        const auto& cyc = cell_cycles[c];
        for (std::size_t k = 0; k < cyc.size(); ++k)
            edge_cells[edge_key(cyc[k], cyc[(k + 1) % cyc.size()])].push_back(
                static_cast<CellId>(c));
    }
    std::vector<Cutline> cuts;
    for (const auto& [key, cs] : edge_cells) {
        if (cs.size() != 2) continue;
        const int u = static_cast<int>(key & 0xffffffffu);
        const int v = static_cast<int>(key >> 32);
        Cutline cut;
        cut.cells = {std::min(cs[0], cs[1]), std::max(cs[0], cs[1])};
        const Point pu = pool[u];
        const Point pv = pool[v];
        cut.segment = lex_less(pu, pv) ? Segment{pu, pv} : Segment{pv, pu};
        cuts.push_back(cut);
    }
    std::sort(cuts.begin(), cuts.end(), [](const Cutline& a, const Cutline& b) {
        return a.cells < b.cells;
    });
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        cuts[i].id = static_cast<CutlineId>(i);
        g.cells_[static_cast<std::size_t>(cuts[i].cells[0])].cutline_ids.push_back(
            cuts[i].id);
        g.cells_[static_cast<std::size_t>(cuts[i].cells[1])].cutline_ids.push_back(
            cuts[i].id);
    }
    g.cutlines_ = std::move(cuts);

    g.adjacency_.assign(g.cells_.size(), {});
    for (const Cutline& cut : g.cutlines_) {
        g.adjacency_[static_cast<std::size_t>(cut.cells[0])].push_back(cut.cells[1]);
        g.adjacency_[static_cast<std::size_t>(cut.cells[1])].push_back(cut.cells[0]);
    }
    for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());

    g.cell_bounds_.reserve(g.cells_.size());
    for (const ConvexCell& cell : g.cells_) g.cell_bounds_.push_back(bbox_of(cell.polygon.vertices));

    // Sanity: cells must tile the free space and form one connected graph.
    double cell_area = 0.0;
    for (const ConvexCell& cell : g.cells_) cell_area += cell.polygon.area();
    double free_area = env.boundary.area();
    for (const auto& o : env.obstacles) free_area -= o.area();
    if (std::abs(cell_area - free_area) > 1e-6 * std::max(1.0, free_area))
        throw InternalError("dissection area mismatch");
    std::vector<bool> seen(g.cells_.size(), false);
    std::queue<CellId> bfs;
    bfs.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!bfs.empty()) {
        const CellId c = bfs.front();
        bfs.pop();
        for (CellId n : g.adjacency_[static_cast<std::size_t>(c)])
            if (!seen[static_cast<std::size_t>(n)]) {
                seen[static_cast<std::size_t>(n)] = true;
                ++reached;
                bfs.push(n);
            }
    }
    if (reached != g.cells_.size()) throw InternalError("dissection graph is disconnected");

    return g;
}

const ConvexCell& DissectionGraph::cell(CellId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= cells_.size())
        throw UnknownCell(std::to_string(id));
    return cells_[static_cast<std::size_t>(id)];
}

CellId DissectionGraph::locate(const Point& q) const {
    if (!finite(q)) throw InvalidInput("locate: non-finite point");
    for (std::size_t c = 0; c < cells_.size(); ++c) {
        if (!cell_bounds_[c].contains(q, kPointTol)) continue;
        if (point_in_polygon(q, cells_[c].polygon) != PointSide::Outside)
            return static_cast<CellId>(c);
    }
    for (const auto& obs : env_.obstacles)
        if (point_in_polygon(q, obs) == PointSide::Inside)
            throw PointInObstacle(point_str(q));
    if (point_in_polygon(q, env_.boundary) == PointSide::Outside)
        throw PointOutsideBoundary(point_str(q));
    // Numerical sliver between cells: accept the nearest cell edge.
    double best_d = std::numeric_limits<double>::infinity();
    CellId best = kNoCell;
    for (std::size_t c = 0; c < cells_.size(); ++c) {
        const auto& v = cells_[c].polygon.vertices;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double d = point_segment_distance(q, v[i], v[(i + 1) % v.size()]);
            if (d < best_d) {
                best_d = d;
                best = static_cast<CellId>(c);
            }
        }
    }
    if (best != kNoCell && best_d <= 1e-7 * std::max(1.0, diameter_)) return best;
    throw PointInObstacle(point_str(q));
}

const Cutline& DissectionGraph::cutline_between(CellId a, CellId b) const {
    cell(a);
    cell(b);
    if (a == b) throw NotAdjacent("identical cells " + std::to_string(a));
    const CellId lo = std::min(a, b);
    const CellId hi = std::max(a, b);
    // Cutlines are sorted by their cell pair.
    auto it = std::lower_bound(cutlines_.begin(), cutlines_.end(), std::array<CellId, 2>{lo, hi},
                               [](const Cutline& c, const std::array<CellId, 2>& key) {
                                   return c.cells < key;
                               });
    if (it == cutlines_.end() || it->cells[0] != lo || it->cells[1] != hi)
        throw NotAdjacent(std::to_string(a) + "," + std::to_string(b));
    return *it;
}

const std::vector<CellId>& DissectionGraph::neighbors(CellId a) const {
    cell(a);
    return adjacency_[static_cast<std::size_t>(a)];
}

bool DissectionGraph::adjacent(CellId a, CellId b) const {
    if (a == b) return false;
    const auto& adj = adjacency_[static_cast<std::size_t>(a)];
    return std::binary_search(adj.begin(), adj.end(), b);
}

}  // namespace cdt
