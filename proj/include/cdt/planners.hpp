#pragma once

#include <vector>

#include "cdt/tcs.hpp"

namespace cdt {

struct TppQuery {
    Polyline start_config;  // tether curve from the anchor to the robot
    Point goal;
};

// Shortest motion path from the start configuration's tip to the goal such
// that the taut tether stays within the tether length throughout. Candidates
// are the feasible goal configurations of the index; equal costs (within
// 1e-9) break toward the lexicographically smaller sequence.
Polyline tpp_plan(const TcsIndex& idx, const TppQuery& q);

// Minimum-cost loop visiting the targets in order and returning home with a
// configuration homotopic to the start configuration. Best-first search over
// partial tours keyed by fixed-subpath cost plus the current return leg.
Polyline tmv_plan(const TcsIndex& idx, const Polyline& start_config,
                  const std::vector<Point>& targets);

// Repeat-free encoding sets under the relaxed lower-bound constraint; the
// preprocessing side of globally optimal untethered planning.
struct UtppIndex {
    Point anchor;
    double zeta_eff = 0.0;
    const DissectionGraph* graph = nullptr;
    std::vector<std::vector<NodeSeq>> table;

    std::size_t encoding_count() const {
        std::size_t n = 0;
        for (const auto& t : table) n += t.size();
        return n;
    }
};

// zeta_eff <= 0 selects the default of twice the environment diameter.
UtppIndex utpp_preprocess(const DissectionGraph& g, const Point& anchor, double zeta_eff = 0.0,
                          std::size_t max_encodings = kDefaultMaxEncodings);

// Globally optimal path between two free points, exact whenever zeta_eff is
// sufficient for the query.
Polyline utpp_plan(const UtppIndex& idx, const Point& start, const Point& goal);

}  // namespace cdt
