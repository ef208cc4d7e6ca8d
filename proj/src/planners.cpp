#include "cdt/planners.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>
#include <string>

namespace cdt {

namespace {

constexpr double kTieTol = 1e-9;

// Shared validation for planners that take a start configuration.
NodeSeq checked_start_seq(const TcsIndex& idx, const Polyline& start_config) {
    const DissectionGraph& g = *idx.graph;
    if (start_config.waypoints.empty()) throw InvalidInput("empty start configuration");
    if (!almost_equal(start_config.front(), idx.anchor))
        throw InvalidInput("start configuration does not begin at the anchor");
    const Polyline taut = theta(g, start_config);
    if (cost(taut) > idx.tether + zeta_tolerance(idx.tether))
        throw InfeasibleStartConfig("taut length " + std::to_string(cost(taut)));
    return gamma_star(g, start_config).seq;
}

}  // namespace

Polyline tpp_plan(const TcsIndex& idx, const TppQuery& q) {
    const DissectionGraph& g = *idx.graph;
    const double limit = idx.tether + zeta_tolerance(idx.tether);

    const NodeSeq rho_s = checked_start_seq(idx, q.start_config);
    const NodeSeq rho_s_rev = reversed_seq(rho_s);
    const Point xs = q.start_config.back();

    CellId goal_cell;
    try {
        goal_cell = g.locate(q.goal);
    } catch (const InvalidInput& e) {
        throw GoalInObstacle(e.what());
    }

    bool found = false;
    double best_cost = 0.0;
    NodeSeq best_seq;
    Polyline best;
    for (const NodeSeq& rho_g : idx.table[static_cast<std::size_t>(goal_cell)]) {
        const double goal_cfg_cost =
            cost(optimal_homotopic_path(g, Encoding{idx.anchor, rho_g, q.goal}));
        if (goal_cfg_cost > limit) continue;
        const NodeSeq seq = rbf(seq_product(rho_s_rev, rho_g));
        Polyline sigma = optimal_homotopic_path(g, Encoding{xs, seq, q.goal});
        const double c = cost(sigma);
        if (!found || c < best_cost - kTieTol ||
            (std::abs(c - best_cost) <= kTieTol && seq < best_seq)) {
            found = true;
            best_cost = c;
            best_seq = seq;
            best = std::move(sigma);
        }
    }
    if (!found) throw NoFeasiblePath("no feasible goal configuration at the goal point");
    return best;
}

Polyline tmv_plan(const TcsIndex& idx, const Polyline& start_config,
                  const std::vector<Point>& targets) {
    const DissectionGraph& g = *idx.graph;

    const NodeSeq rho_s = checked_start_seq(idx, start_config);
    const Point xs = start_config.back();
    const std::size_t n_targets = targets.size();

    // The search cannot terminate when any target has no feasible
    // configuration; check up front.
    std::vector<ConfigSet> focs;
    focs.reserve(n_targets);
    for (std::size_t k = 0; k < n_targets; ++k) {
        ConfigSet set = get_all_foc(idx, targets[k]);
        if (set.configs.empty())
            throw NoFeasibleTour("no feasible configuration at target " + std::to_string(k));
        focs.push_back(std::move(set));
    }
    if (n_targets == 0) return make_polyline({xs});

    struct Node {
        std::size_t visited = 0;
        Polyline fixed_subpath;
        NodeSeq last_seq;    // encoding of the configuration at the current position
        Point position;
        Polyline return_leg;
        double total_cost = 0.0;
        std::uint64_t order = 0;
    };
    struct NodeCmp {
        bool operator()(const Node& a, const Node& b) const {
            if (a.total_cost != b.total_cost) return a.total_cost > b.total_cost;
            if (a.visited != b.visited) return a.visited < b.visited;
            return a.order > b.order;
        }
    };

    std::priority_queue<Node, std::vector<Node>, NodeCmp> queue;
    std::uint64_t order = 0;
    queue.push(Node{0, make_polyline({xs}), rho_s, xs, make_polyline({xs}), 0.0, order++});

    while (!queue.empty()) {
        Node node = queue.top();
        queue.pop();
        if (node.visited == n_targets) return concat(node.fixed_subpath, node.return_leg);

        const NodeSeq rho_k_rev = reversed_seq(node.last_seq);
        const double fixed_cost = cost(node.fixed_subpath);
        for (const TetherConfig& cfg : focs[node.visited].configs) {
            const Point& next_pt = focs[node.visited].goal;
            Polyline leg = optimal_homotopic_path(
                g, Encoding{node.position, rbf(seq_product(rho_k_rev, cfg.seq)), next_pt});
            Polyline ret = optimal_homotopic_path(
                g, Encoding{next_pt, rbf(seq_product(reversed_seq(cfg.seq), rho_s)), xs});
            Node child;
            child.visited = node.visited + 1;
            child.fixed_subpath = concat(node.fixed_subpath, leg);
            child.last_seq = cfg.seq;
            child.position = next_pt;
            child.total_cost = fixed_cost + cost(leg) + cost(ret);
            child.return_leg = std::move(ret);
            child.order = order++;
            queue.push(std::move(child));
        }
    }
    throw NoFeasibleTour("search exhausted");
}

UtppIndex utpp_preprocess(const DissectionGraph& g, const Point& anchor, double zeta_eff,
                          std::size_t max_encodings) {
    if (zeta_eff <= 0.0) zeta_eff = 2.0 * g.diameter();
    CellId anchor_cell;
    try {
        anchor_cell = g.locate(anchor);
    } catch (const InvalidInput& e) {
        throw AnchorInObstacle(e.what());
    }

    UtppIndex idx;
    idx.anchor = anchor;
    idx.zeta_eff = zeta_eff;
    idx.graph = &g;
    idx.table.assign(g.cells().size(), {});

    NodeSeq base{anchor_cell};
    idx.table[static_cast<std::size_t>(anchor_cell)].push_back(base);
    std::deque<NodeSeq> queue;
    queue.push_back(std::move(base));
    std::size_t total = 1;

    std::vector<double> warm;
    while (!queue.empty()) {
        const NodeSeq s = std::move(queue.front());
        queue.pop_front();
        for (CellId near : g.neighbors(s.back())) {
            if (std::find(s.begin(), s.end(), near) != s.end()) continue;  // repeat-free
            NodeSeq grown = s;
            grown.push_back(near);
            const Segment& cut = g.cutline_between(s.back(), near).segment;
            warm.clear();
            const double c_mid =
                descend_cost(g, Encoding{anchor, grown, cut.midpoint()}, warm, nullptr);
            if (c_mid - 0.5 * cut.length() > zeta_eff) continue;  // lowerC screen
            if (++total > max_encodings)
                throw EncodingLimitExceeded(std::to_string(max_encodings) +
                                            " repeat-free encodings");
            idx.table[static_cast<std::size_t>(near)].push_back(grown);
            queue.push_back(std::move(grown));
        }
    }

    for (auto& entries : idx.table) std::sort(entries.begin(), entries.end());
    return idx;
}

Polyline utpp_plan(const UtppIndex& idx, const Point& start, const Point& goal) {
    const DissectionGraph& g = *idx.graph;
    const CellId start_cell = g.locate(start);
    const CellId goal_cell = g.locate(goal);

    const auto& starts = idx.table[static_cast<std::size_t>(start_cell)];
    const auto& goals = idx.table[static_cast<std::size_t>(goal_cell)];

    bool found = false;
    double best_cost = 0.0;
    NodeSeq best_seq;
    Polyline best;
    for (const NodeSeq& rho_s : starts) {
        const NodeSeq rho_s_rev = reversed_seq(rho_s);
        for (const NodeSeq& rho_g : goals) {
            const NodeSeq seq = rbf(seq_product(rho_s_rev, rho_g));
            Polyline sigma = optimal_homotopic_path(g, Encoding{start, seq, goal});
            const double c = cost(sigma);
            if (!found || c < best_cost - kTieTol ||
                (std::abs(c - best_cost) <= kTieTol && seq < best_seq)) {
                found = true;
                best_cost = c;
                best_seq = seq;
                best = std::move(sigma);
            }
        }
    }
    if (!found)
        throw NoPath("empty candidate set; zeta_eff " + std::to_string(idx.zeta_eff) +
                     " is too small");
    return best;
}

}  // namespace cdt
