#include "cdt/svg.hpp"

#include <sstream>

namespace cdt {

namespace {

const char* kPathColors[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad",
                             "#d35400", "#16a085", "#7f8c8d", "#f39c12"};

class SvgWriter {
public:
    SvgWriter(const BBox& box) : box_(box) {
        const double margin = 0.05 * std::max(box.max_x - box.min_x, box.max_y - box.min_y);
        min_x_ = box.min_x - margin;
        min_y_ = box.min_y - margin;
        w_ = (box.max_x - box.min_x) + 2 * margin;
        h_ = (box.max_y - box.min_y) + 2 * margin;
        scale_ = 640.0 / std::max(w_, h_);
    }

    double sx(double x) const { return (x - min_x_) * scale_; }
    double sy(double y) const { return (min_y_ + h_ - y) * scale_; }  // y grows upward

    std::string points_attr(const std::vector<Point>& pts) const {
        std::ostringstream os;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) os << " ";
            os << sx(pts[i].x) << "," << sy(pts[i].y);
        }
        return os.str();
    }

    double width() const { return w_ * scale_; }
    double height() const { return h_ * scale_; }

private:
    BBox box_;
    double min_x_, min_y_, w_, h_, scale_;
};

void emit_polyline(std::ostringstream& os, const SvgWriter& w, const Polyline& p,
                   const char* color, double stroke) {
    if (p.waypoints.size() == 1) {
        os << "  <circle cx=\"" << w.sx(p.front().x) << "\" cy=\"" << w.sy(p.front().y)
           << "\" r=\"" << 1.5 * stroke << "\" fill=\"" << color << "\"/>\n";
        return;
    }
    os << "  <polyline points=\"" << w.points_attr(p.waypoints) << "\" fill=\"none\" stroke=\""
       << color << "\" stroke-width=\"" << stroke << "\" stroke-linejoin=\"round\"/>\n";
}

}  // namespace

std::string render_svg(const DissectionGraph& g, const SvgLayers& layers) {
    const SvgWriter w(g.bounds());
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w.width() << "\" height=\""
       << w.height() << "\" viewBox=\"0 0 " << w.width() << " " << w.height() << "\">\n";

    if (layers.cells) {
        for (const ConvexCell& cell : g.cells()) {
            os << "  <polygon points=\"" << w.points_attr(cell.polygon.vertices)
               << "\" fill=\"#eef2f8\" stroke=\"#9aa7b5\" stroke-width=\"1\"/>\n";
        }
        for (const auto& obs : g.env().obstacles) {
            os << "  <polygon points=\"" << w.points_attr(obs.vertices)
               << "\" fill=\"#4a4a4a\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
        }
    }
    if (layers.cutlines) {
        for (const Cutline& cut : g.cutlines()) {
            os << "  <line x1=\"" << w.sx(cut.segment.a.x) << "\" y1=\"" << w.sy(cut.segment.a.y)
               << "\" x2=\"" << w.sx(cut.segment.b.x) << "\" y2=\"" << w.sy(cut.segment.b.y)
               << "\" stroke=\"#5b7ea6\" stroke-width=\"1\" stroke-dasharray=\"5,4\"/>\n";
        }
    }
    for (std::size_t i = 0; i < layers.configs.size(); ++i)
        emit_polyline(os, w, layers.configs[i], kPathColors[(i + 4) % 8], 2.0);
    for (std::size_t i = 0; i < layers.paths.size(); ++i)
        emit_polyline(os, w, layers.paths[i], kPathColors[i % 8], 2.5);
    for (const Point& m : layers.markers) {
        os << "  <circle cx=\"" << w.sx(m.x) << "\" cy=\"" << w.sy(m.y)
           << "\" r=\"4\" fill=\"#27ae60\" stroke=\"#145a32\"/>\n";
    }
    if (layers.anchor) {
        const double cx = w.sx(layers.anchor->x);
        const double cy = w.sy(layers.anchor->y);
        os << "  <path d=\"M " << cx << " " << cy - 7 << " L " << cx + 2.1 << " " << cy - 2.2
           << " L " << cx + 7 << " " << cy - 2.2 << " L " << cx + 3.2 << " " << cy + 1.4 << " L "
           << cx + 4.3 << " " << cy + 6.2 << " L " << cx << " " << cy + 3.4 << " L " << cx - 4.3
           << " " << cy + 6.2 << " L " << cx - 3.2 << " " << cy + 1.4 << " L " << cx - 7 << " "
           << cy - 2.2 << " L " << cx - 2.1 << " " << cy - 2.2
           << " Z\" fill=\"#2c5aa0\" stroke=\"#17355f\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace cdt
