#pragma once

#include <cstdint>
#include <vector>

#include "cdt/dissection.hpp"
#include "cdt/geom.hpp"

namespace cdt {

// Path on the dissection graph: consecutive cells adjacent and distinct.
using NodeSeq = std::vector<CellId>;

// Homotopy-class key for paths: start point, rollback-free cell sequence,
// end point.
struct Encoding {
    Point start;
    NodeSeq seq;
    Point end;
};

inline bool operator==(const Encoding& a, const Encoding& b) {
    return almost_equal(a.start, b.start) && a.seq == b.seq && almost_equal(a.end, b.end);
}

// Removes every rollback subpath until none remain; the result is unique
// regardless of removal order.
NodeSeq rbf(const NodeSeq& s);

// Concatenation dropping the duplicate junction element. Not rbf-reduced.
NodeSeq seq_product(const NodeSeq& s1, const NodeSeq& s2);

NodeSeq reversed_seq(NodeSeq s);

bool is_rollback_free(const NodeSeq& s);

// Product of encodings; junction points must coincide. When the junction
// sequences differ but the junction point lies on their shared cutline, the
// implicit one-step bridge is inserted before reduction.
Encoding encoding_product(const DissectionGraph& g, const Encoding& e1, const Encoding& e2);

// Raw cell trace of a polyline, possibly containing rollbacks.
struct RawTrace {
    Point start;
    NodeSeq seq;
    Point end;
};

// Walks every segment of p through cell/cutline crossings. Tangential
// contact with a cutline does not count as a crossing.
RawTrace gamma(const DissectionGraph& g, const Polyline& p);

// The CDT encoder: gamma followed by rollback removal.
Encoding gamma_star(const DissectionGraph& g, const Polyline& p);

// The generalized inverse encoder: shortest polyline in the homotopy class
// of e. Waypoints are e.start, one point per cutline of e.seq, e.end;
// coordinate descent from cutline midpoints with the closed-form per-cutline
// minimizer.
Polyline optimal_homotopic_path(const DissectionGraph& g, const Encoding& e);

// Taut-path operator: optimal_homotopic_path(gamma_star(p)).
Polyline theta(const DissectionGraph& g, const Polyline& p);

void validate_encoding(const DissectionGraph& g, const Encoding& e);

// Warm-startable descent core. `ts` holds one cutline parameter per crossing
// and is resized/reset to midpoints when it does not match e.seq; on return
// it carries the converged parameters. Used by the validity search, which
// evaluates many nearby encodings.
double descend_cost(const DissectionGraph& g, const Encoding& e, std::vector<double>& ts,
                    Polyline* path_out);

// Number of optimal_homotopic_path / descend_cost evaluations since the last
// reset. Drives the preprocessing/query effort comparisons.
std::uint64_t optimal_path_evaluations();
void reset_optimal_path_evaluations();

}  // namespace cdt
