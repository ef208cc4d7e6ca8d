#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdt/dissection.hpp"
#include "cdt/geom.hpp"

namespace cdt {

struct SvgLayers {
    bool cells = true;
    bool cutlines = true;
    std::vector<Polyline> paths;
    std::vector<Polyline> configs;
    std::optional<Point> anchor;
    std::vector<Point> markers;
};

// Well-formed SVG: light-filled cells, dashed cutlines, per-class colored
// paths, starred anchor.
std::string render_svg(const DissectionGraph& g, const SvgLayers& layers);

}  // namespace cdt
