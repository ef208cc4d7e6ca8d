#include "cdt/encoding.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>

namespace cdt {

namespace {

std::atomic<std::uint64_t> g_path_evals{0};

std::string seq_str(const NodeSeq& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + ")";
}

}  // namespace

NodeSeq rbf(const NodeSeq& s) {
    NodeSeq out;
    out.reserve(s.size());
    for (CellId c : s) {
        if (!out.empty() && out.back() == c) continue;
        if (out.size() >= 2 && out[out.size() - 2] == c)
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

NodeSeq seq_product(const NodeSeq& s1, const NodeSeq& s2) {
    if (s1.empty() || s2.empty()) throw InvalidInput("sequence product of empty sequence");
    if (s1.back() != s2.front())
        throw JunctionMismatch(seq_str(s1) + " * " + seq_str(s2));
    NodeSeq out = s1;
    out.insert(out.end(), s2.begin() + 1, s2.end());
    return out;
}

NodeSeq reversed_seq(NodeSeq s) {
    std::reverse(s.begin(), s.end());
    return s;
}

bool is_rollback_free(const NodeSeq& s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == s[i + 1]) return false;
    for (std::size_t i = 0; i + 2 < s.size(); ++i)
        if (s[i] == s[i + 2]) return false;
    return true;
}

Encoding encoding_product(const DissectionGraph& g, const Encoding& e1, const Encoding& e2) {
    if (!almost_equal(e1.end, e2.start))
        throw EndpointMismatch("encoding product junction differs");
    if (e1.seq.empty() || e2.seq.empty()) throw InvalidEncoding("empty sequence");
    NodeSeq raw;
    if (e1.seq.back() == e2.seq.front()) {
        raw = seq_product(e1.seq, e2.seq);
    } else if (g.adjacent(e1.seq.back(), e2.seq.front())) {
        // The locate tie-break may assign the junction point to either
        // incident cell; bridge across the shared cutline.
        const Cutline& cut = g.cutline_between(e1.seq.back(), e2.seq.front());
        if (point_segment_distance(e1.end, cut.segment.a, cut.segment.b) > kPointTol)
            throw EndpointMismatch("junction point not on the shared cutline");
        raw = e1.seq;
        raw.insert(raw.end(), e2.seq.begin(), e2.seq.end());
    } else {
        throw EndpointMismatch("junction cells neither equal nor adjacent");
    }
    return Encoding{e1.start, rbf(raw), e2.end};
}

// ---------------------------------------------------------------------------
// gamma: exit-lazy cell walking.
//
// The walker stays in the closure of its current cell for as long as the
// path does, so grazing or running along a cutline never registers a
// crossing. When the path leaves the closure, the successor cell is picked
// by probing forward along the path; passes through a dissection vertex
// resolve step by step around the vertex fan.

namespace {

class Walker {
public:
    Walker(const DissectionGraph& g, const Polyline& p)
        : g_(g), p_(p), ctol_(kPointTol * std::max(1.0, g.diameter())) {}

    RawTrace run() {
        CellId cur;
        try {
            cur = g_.locate(p_.front());
        } catch (const InvalidInput& e) {
            throw PathLeavesFreeSpace(std::string("start waypoint: ") + e.what());
        }
        NodeSeq seq{cur};

        const std::size_t nseg = p_.waypoints.size() - 1;
        for (std::size_t si = 0; si < nseg; ++si) {
            const Point a = p_.waypoints[si];
            const Point b = p_.waypoints[si + 1];
            const double seg_len = dist(a, b);
            double t = 0.0;
            std::size_t guard = 0;
            while (true) {
                if (++guard > 6 * g_.cells().size() + 32)
                    throw InternalError("gamma walk did not progress");
                const auto iv =
                    clip_segment_convex(a, b, g_.cell(cur).polygon.vertices, ctol_);
                double tout = iv.empty ? t : std::max(iv.t_out, t);
                if (tout >= 1.0 - 1e-15) break;
                const Point x = Segment{a, b}.at(tout);
#ifdef CDT_GAMMA_TRACE
                fprintf(stderr, "seg %zu cur=%d t=%.17g tout=%.17g x=(%.17g,%.17g) empty=%d\n",
                        si, cur, t, tout, x.x, x.y, (int)iv.empty);
#endif
                const bool zero_advance = (tout - t) * seg_len <= ctol_;
                const CellId prev =
                    (zero_advance && seq.size() >= 2) ? seq[seq.size() - 2] : kNoCell;
                const CellId next = select_next(cur, prev, x, si, tout);
                seq.push_back(next);
                cur = next;
                t = tout;
            }
        }
        return {p_.front(), seq, p_.back()};
    }

private:
    bool in_cell(CellId c, const Point& q, double tol) const {
        return point_in_convex(q, g_.cell(c).polygon.vertices, tol);
    }

    // Point at arc length `s` ahead of parameter `tpos` on segment `si`.
    Point point_ahead(std::size_t si, double tpos, double s) const {
        const auto& w = p_.waypoints;
        double remaining = s;
        for (std::size_t k = si; k + 1 < w.size(); ++k) {
            const double len = dist(w[k], w[k + 1]);
            const double from = (k == si) ? tpos * len : 0.0;
            if (from + remaining <= len)
                return Segment{w[k], w[k + 1]}.at((from + remaining) / std::max(len, 1e-300));
            remaining -= len - from;
        }
        return w.back();
    }

    CellId select_next(CellId cur, CellId exclude, const Point& x, std::size_t si,
                       double tpos) const {
        // Near a vertex of the current cell, eps-containment cannot be
        // trusted to pick the successor: gather every nearby neighbor and
        // let the probe decide. Away from vertices, the single cell whose
        // closure holds the exit point is the successor.
        double tol = ctol_;
        for (const Point& v : g_.cell(cur).polygon.vertices)
            if (dist(v, x) <= 64.0 * ctol_) {
                tol = 64.0 * ctol_;
                break;
            }
        std::vector<CellId> cand;
        for (int widen = 0; cand.empty() && widen < 5; ++widen, tol *= 8.0) {
            for (CellId n : g_.neighbors(cur)) {
                if (n == exclude) continue;
                if (in_cell(n, x, tol)) cand.push_back(n);
            }
        }
        if (cand.empty())
            throw PathLeavesFreeSpace("segment " + std::to_string(si) + " exits the free space");
#ifdef CDT_GAMMA_TRACE
        fprintf(stderr, "  select cur=%d tol=%g cand=", cur, tol);
        for (CellId n : cand) fprintf(stderr, "%d ", n);
        fprintf(stderr, "\n");
#endif
        if (cand.size() == 1) return cand[0];

        std::vector<CellId> alive = cand;
        double s = std::max(1e-9 * g_.diameter(), 8.0 * tol);
        for (int j = 0; j < 48 && s < 4.0 * g_.diameter(); ++j, s *= 4.0) {
            const Point pt = point_ahead(si, tpos, s);
            std::vector<CellId> narrowed;
            for (CellId n : alive)
                if (in_cell(n, pt, tol)) narrowed.push_back(n);
#ifdef CDT_GAMMA_TRACE
            fprintf(stderr, "  probe s=%g pt=(%.17g,%.17g) narrowed=", s, pt.x, pt.y);
            for (CellId n : narrowed) fprintf(stderr, "%d ", n);
            fprintf(stderr, "\n");
#endif
            if (narrowed.size() == 1) return narrowed[0];
            if (narrowed.empty()) {
                // Jumped every candidate: the path passes a dissection
                // vertex; pick the side the path exits toward.
                const CellId w = wedge_side(cur, x, pt, cand, tol);
                if (w != kNoCell) return w;
                break;
            }
            alive = narrowed;
            if (almost_equal(pt, p_.back())) break;
        }
        return *std::min_element(alive.begin(), alive.end());
    }

    // For an exit exactly at a vertex of `cur`, decides which incident edge
    // the direction `toward` leaves across and returns the candidate behind
    // that edge.
    CellId wedge_side(CellId cur, const Point& x, const Point& toward,
                      const std::vector<CellId>& cand, double tol) const {
        const auto& poly = g_.cell(cur).polygon.vertices;
        const std::size_t n = poly.size();
        std::size_t vi = n;
        for (std::size_t i = 0; i < n; ++i)
            if (almost_equal(poly[i], x, tol)) {
                vi = i;
                break;
            }
        if (vi == n) return kNoCell;
        const Point vnext = poly[(vi + 1) % n];
        const Point vprev = poly[(vi + n - 1) % n];
        const Point dir = toward - x;
        if (norm(dir) <= 0.0) return kNoCell;
        const Point u1 = vnext - x;
        const Point u2 = vprev - x;
        Point edge_a, edge_b;
        if (cross(u1, dir) < 0.0) {
            edge_a = x;
            edge_b = vnext;
        } else if (cross(dir, u2) < 0.0) {
            edge_a = vprev;
            edge_b = x;
        } else {
            return kNoCell;
        }
        for (CellId c : cand) {
            const Segment& s = g_.cutline_between(cur, c).segment;
            if (point_segment_distance(edge_a, s.a, s.b) <= tol &&
                point_segment_distance(edge_b, s.a, s.b) <= tol)
                return c;
        }
        return kNoCell;
    }

    const DissectionGraph& g_;
    const Polyline& p_;
    double ctol_;
};

}  // namespace

RawTrace gamma(const DissectionGraph& g, const Polyline& p) {
    if (p.waypoints.empty()) throw InvalidInput("gamma of empty polyline");
    return Walker(g, p).run();
}

Encoding gamma_star(const DissectionGraph& g, const Polyline& p) {
    RawTrace t = gamma(g, p);
    return Encoding{t.start, rbf(t.seq), t.end};
}

void validate_encoding(const DissectionGraph& g, const Encoding& e) {
    if (e.seq.empty()) throw InvalidEncoding("empty sequence");
    if (!is_rollback_free(e.seq)) throw InvalidEncoding("sequence has a rollback");
    for (std::size_t i = 0; i + 1 < e.seq.size(); ++i)
        if (!g.adjacent(e.seq[i], e.seq[i + 1]))
            throw InvalidEncoding("cells " + std::to_string(e.seq[i]) + "," +
                                  std::to_string(e.seq[i + 1]) + " not adjacent");
    const double tol = kPointTol * std::max(1.0, g.diameter());
    if (!point_in_convex(e.start, g.cell(e.seq.front()).polygon.vertices, tol))
        throw InvalidEncoding("start point not in first cell");
    if (!point_in_convex(e.end, g.cell(e.seq.back()).polygon.vertices, tol))
        throw InvalidEncoding("end point not in last cell");
}

double descend_cost(const DissectionGraph& g, const Encoding& e, std::vector<double>& ts,
                    Polyline* path_out) {
    g_path_evals.fetch_add(1, std::memory_order_relaxed);

    const std::size_t ncut = e.seq.size() - 1;
    if (ncut == 0) {
        if (path_out) *path_out = make_polyline({e.start, e.end});
        ts.clear();
        return dist(e.start, e.end);
    }

    std::vector<const Segment*> cuts(ncut);
    for (std::size_t k = 0; k < ncut; ++k)
        cuts[k] = &g.cutline_between(e.seq[k], e.seq[k + 1]).segment;

    if (ts.size() != ncut) ts.assign(ncut, 0.5);
    std::vector<Point> pts(ncut);
    for (std::size_t k = 0; k < ncut; ++k) pts[k] = cuts[k]->at(ts[k]);

    const auto total_cost = [&]() {
        double c = dist(e.start, pts.front());
        for (std::size_t k = 0; k + 1 < ncut; ++k) c += dist(pts[k], pts[k + 1]);
        c += dist(pts.back(), e.end);
        return c;
    };

    const double threshold = 1e-9 * std::max(1.0, g.diameter());
    double prev = total_cost();
    for (int sweep = 0; sweep < 10000; ++sweep) {
        for (std::size_t k = 0; k < ncut; ++k) {
            const Point& before = (k == 0) ? e.start : pts[k - 1];
            const Point& after = (k + 1 == ncut) ? e.end : pts[k + 1];
            const ViaPoint v = min_via_point(before, after, *cuts[k]);
            ts[k] = v.t;
            pts[k] = v.x;
        }
        const double cur = total_cost();
        if (prev - cur < threshold) {
            prev = cur;
            break;
        }
        prev = cur;
    }

    if (path_out) {
        std::vector<Point> w;
        w.reserve(ncut + 2);
        w.push_back(e.start);
        w.insert(w.end(), pts.begin(), pts.end());
        w.push_back(e.end);
        *path_out = make_polyline(std::move(w));
    }
    return prev;
}

Polyline optimal_homotopic_path(const DissectionGraph& g, const Encoding& e) {
    validate_encoding(g, e);
    std::vector<double> ts;
    Polyline out;
    descend_cost(g, e, ts, &out);
    return out;
}

Polyline theta(const DissectionGraph& g, const Polyline& p) {
    return optimal_homotopic_path(g, gamma_star(g, p));
}

std::uint64_t optimal_path_evaluations() {
    return g_path_evals.load(std::memory_order_relaxed);
}

void reset_optimal_path_evaluations() { g_path_evals.store(0, std::memory_order_relaxed); }

}  // namespace cdt
