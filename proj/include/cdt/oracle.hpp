#pragma once

#include <vector>

#include "cdt/encoding.hpp"

namespace cdt {
namespace oracle {

// Exact shortest path through the sleeve of cells of e, taut-string funnel
// over the ordered cutline portals. Independent of the coordinate-descent
// solver it cross-checks.
Polyline funnel_shortest(const DissectionGraph& g, const Encoding& e);

// Exact Euclidean shortest path via Dijkstra over the visibility graph of
// the environment vertices plus the query endpoints.
Polyline visibility_shortest(const Environment& env, const Point& a, const Point& b);

// Freely reduced word of signed obstacle-ray crossings. Letters are
// +(i+1)/-(i+1) for obstacle i.
struct HSignature {
    std::vector<int> word;
};

inline bool operator==(const HSignature& a, const HSignature& b) { return a.word == b.word; }
inline bool operator<(const HSignature& a, const HSignature& b) { return a.word < b.word; }

HSignature h_signature(const Environment& env, const Polyline& p);

// One tethered homotopy class found by the grid oracle.
struct GridHagClass {
    HSignature signature;
    double approx_cost = 0.0;     // grid-metric cost of the representative
    Polyline representative;      // anchor -> goal polyline through grid centers
};

// Dijkstra over (grid cell, h-signature) states from the anchor. Returns all
// classes whose settled cost at the goal is within tether * (1 + slack);
// callers re-tighten representatives before any exact tether test.
// resolution <= 0 selects environment diameter / 200.
std::vector<GridHagClass> grid_hag_configs(const Environment& env, const Point& anchor,
                                           double tether, const Point& goal,
                                           double resolution = 0.0, double slack = 0.10);

}  // namespace oracle
}  // namespace cdt
