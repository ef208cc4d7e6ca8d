#pragma once

#include <cstddef>
#include <vector>

#include "cdt/encoding.hpp"

namespace cdt {

inline constexpr std::size_t kDefaultMaxEncodings = 1'000'000;

// Feasibility tolerance on tether-length comparisons.
inline double zeta_tolerance(double tether) { return 1e-6 * tether; }

// Per-cell tethered-configuration encoding sets for one anchor and tether
// length. Immutable after tcs_preprocess; holds a reference to the graph.
struct TcsIndex {
    Point anchor;
    double tether = 0.0;
    const DissectionGraph* graph = nullptr;
    // table[cell] is sorted lexicographically; every sequence starts at the
    // anchor cell, is rollback-free and passed the validity test.
    std::vector<std::vector<NodeSeq>> table;

    std::size_t encoding_count() const {
        std::size_t n = 0;
        for (const auto& t : table) n += t.size();
        return n;
    }
};

// Whether some point on the last cutline of s admits a taut configuration
// within the tether: conservative band test, endpoint monotonicity screen,
// then ternary search over the convex cutline cost profile.
bool encoding_validity(const DissectionGraph& g, const Point& anchor, double tether,
                       const NodeSeq& s);

// FIFO expansion of the tethered-configuration encoding sets from the anchor
// cell. The result is the validity fixpoint and does not depend on queue
// order. Throws EncodingLimitExceeded past max_encodings.
TcsIndex tcs_preprocess(const DissectionGraph& g, const Point& anchor, double tether,
                        std::size_t max_encodings = kDefaultMaxEncodings);

struct TetherConfig {
    Polyline path;
    double cost = 0.0;
    NodeSeq seq;
};

struct ConfigSet {
    Point goal;
    std::vector<TetherConfig> configs;  // cost ascending, ties lexicographic
};

// All feasible optimal configurations at the goal point.
ConfigSet get_all_foc(const TcsIndex& idx, const Point& goal);

}  // namespace cdt
