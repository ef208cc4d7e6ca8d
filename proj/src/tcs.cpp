#include "cdt/tcs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

namespace cdt {

namespace {

// f(t) = cost of the taut path from the anchor through s to the last
// cutline at parameter t. Warm-starts each evaluation from the previous
// one's waypoints; the validity search probes many nearby t.
class CutlineCost {
public:
    CutlineCost(const DissectionGraph& g, const Point& anchor, const NodeSeq& s)
        : g_(g), cut_(&g.cutline_between(s[s.size() - 2], s.back()).segment) {
        enc_.start = anchor;
        enc_.seq = s;
    }

    double operator()(double t) {
        enc_.end = cut_->at(t);
        return descend_cost(g_, enc_, ts_, nullptr);
    }

    double cutline_length() const { return cut_->length(); }

private:
    const DissectionGraph& g_;
    const Segment* cut_;
    Encoding enc_;
    std::vector<double> ts_;
};

}  // namespace

bool encoding_validity(const DissectionGraph& g, const Point& anchor, double tether,
                       const NodeSeq& s) {
    if (s.size() < 2) throw InvalidInput("encoding_validity needs a sequence of length >= 2");
    const double limit = tether + zeta_tolerance(tether);

    CutlineCost f(g, anchor, s);
    const double half_cut = 0.5 * f.cutline_length();

    const double c_mid = f(0.5);
    if (c_mid - half_cut > limit) return false;
    if (c_mid <= limit) return true;

    const double c0 = f(0.0);
    const double c1 = f(1.0);
    if (c0 <= limit || c1 <= limit) return true;
    // Monotone over the cutline: the minimum is at an endpoint.
    if ((c0 <= c_mid && c_mid <= c1) || (c1 <= c_mid && c_mid <= c0)) return false;

    double t_low = 0.0, t_high = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double t_mid1 = t_low + (t_high - t_low) / 3.0;
        const double t_mid2 = t_high - (t_high - t_low) / 3.0;
        const double c_mid1 = f(t_mid1);
        const double c_mid2 = f(t_mid2);
        if (c_mid1 <= limit || c_mid2 <= limit) return true;
        if (c_mid1 <= c_mid2)
            t_high = t_mid2;
        else
            t_low = t_mid1;
        if (std::abs(c_mid1 - c_mid2) < 1e-7 * tether) break;
    }
    return false;
}

TcsIndex tcs_preprocess(const DissectionGraph& g, const Point& anchor, double tether,
                        std::size_t max_encodings) {
    if (!(tether > 0.0)) throw InvalidInput("tether length must be positive");
    CellId anchor_cell;
    try {
        anchor_cell = g.locate(anchor);
    } catch (const InvalidInput& e) {
        throw AnchorInObstacle(e.what());
    }

    TcsIndex idx;
    idx.anchor = anchor;
    idx.tether = tether;
    idx.graph = &g;
    idx.table.assign(g.cells().size(), {});

    NodeSeq base{anchor_cell};
    idx.table[static_cast<std::size_t>(anchor_cell)].push_back(base);
    std::deque<NodeSeq> queue;
    queue.push_back(std::move(base));
    std::size_t total = 1;

    while (!queue.empty()) {
        const NodeSeq s = std::move(queue.front());
        queue.pop_front();
        const CellId last = s.back();
        const CellId second_last = s.size() >= 2 ? s[s.size() - 2] : kNoCell;
        for (CellId near : g.neighbors(last)) {
            if (near == second_last) continue;  // would form an immediate rollback
            NodeSeq grown = s;
            grown.push_back(near);
            if (!encoding_validity(g, anchor, tether, grown)) continue;
            if (++total > max_encodings)
                throw EncodingLimitExceeded(std::to_string(max_encodings) +
                                            " tethered-configuration encodings");
            idx.table[static_cast<std::size_t>(near)].push_back(grown);
            queue.push_back(std::move(grown));
        }
    }

    for (auto& entries : idx.table) std::sort(entries.begin(), entries.end());
    return idx;
}

ConfigSet get_all_foc(const TcsIndex& idx, const Point& goal) {
    const DissectionGraph& g = *idx.graph;
    CellId goal_cell;
    try {
        goal_cell = g.locate(goal);
    } catch (const InvalidInput& e) {
        throw GoalInObstacle(e.what());
    }

    const double limit = idx.tether + zeta_tolerance(idx.tether);
    ConfigSet set;
    set.goal = goal;
    for (const NodeSeq& s : idx.table[static_cast<std::size_t>(goal_cell)]) {
        Polyline path = optimal_homotopic_path(g, Encoding{idx.anchor, s, goal});
        const double c = cost(path);
        if (c <= limit) set.configs.push_back({std::move(path), c, s});
    }
    std::sort(set.configs.begin(), set.configs.end(),
              [](const TetherConfig& a, const TetherConfig& b) {
                  if (a.cost != b.cost) return a.cost < b.cost;
                  return a.seq < b.seq;
              });
    return set;
}

}  // namespace cdt
