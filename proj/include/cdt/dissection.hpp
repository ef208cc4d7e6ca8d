#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cdt/geom.hpp"

namespace cdt {

using CellId = std::int32_t;
using CutlineId = std::int32_t;
inline constexpr CellId kNoCell = -1;

// Polygon-with-holes workspace. The boundary is CCW, obstacles are CW;
// normalize_environment() fixes orientations for loaded data.
struct Environment {
    SimplePolygon boundary;
    std::vector<SimplePolygon> obstacles;
    std::string name;
};

struct ConvexCell {
    CellId id = kNoCell;
    SimplePolygon polygon;
    std::vector<CutlineId> cutline_ids;
};

// Shared full edge between two adjacent convex cells.
struct Cutline {
    CutlineId id = -1;
    Segment segment;
    std::array<CellId, 2> cells{kNoCell, kNoCell};
};

// Convex dissection of the free space plus its topology graph. Immutable
// after dissect(); all queries are read-only.
class DissectionGraph {
public:
    const Environment& env() const { return env_; }
    const std::vector<ConvexCell>& cells() const { return cells_; }
    const std::vector<Cutline>& cutlines() const { return cutlines_; }

    // Cell whose closed polygon contains q; points on a cutline resolve to
    // the lower cell id. Throws PointInObstacle / PointOutsideBoundary.
    CellId locate(const Point& q) const;

    const Cutline& cutline_between(CellId a, CellId b) const;

    // Adjacent cell ids, sorted ascending.
    const std::vector<CellId>& neighbors(CellId a) const;

    // Diagonal of the environment bounding box; the scale reference for
    // path-descent thresholds.
    double diameter() const { return diameter_; }

    BBox bounds() const { return bounds_; }

    bool adjacent(CellId a, CellId b) const;

    const ConvexCell& cell(CellId id) const;

private:
    friend DissectionGraph dissect(const Environment& env);

    Environment env_;
    std::vector<ConvexCell> cells_;
    std::vector<Cutline> cutlines_;
    std::vector<std::vector<CellId>> adjacency_;
    std::vector<BBox> cell_bounds_;
    BBox bounds_;
    double diameter_ = 0.0;
};

// Enforces boundary CCW / obstacles CW and basic shape sanity.
Environment normalize_environment(Environment env);

// Throws InvalidEnvironment on self-intersections, out-of-bounds obstacles,
// or touching contours.
void validate_environment(const Environment& env);

// Triangulates the free space (ear clipping with hole bridging, no Steiner
// points) and merges diagonals Hertel-Mehlhorn style; the remaining internal
// diagonals become cutlines. Deterministic for identical input.
DissectionGraph dissect(const Environment& env);

}  // namespace cdt
