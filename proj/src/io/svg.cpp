#include "upper_envelope/io/svg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "upper_envelope/io/format.hpp"

namespace uenv::io {

namespace {

struct Box {
    double x0 = std::numeric_limits<double>::infinity();
    double y0 = std::numeric_limits<double>::infinity();
    double x1 = -std::numeric_limits<double>::infinity();
    double y1 = -std::numeric_limits<double>::infinity();

    void add(double x, double y) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
    }
    bool valid() const { return x0 <= x1 && y0 <= y1; }
};

std::string num(double v) { return format_real(v); }

}  // namespace

std::string render_plot(std::span<const Point2> world_circles, const Envelope& envelope,
                        const DirectionalFrame& frame, const PlotOptions& options) {
    if (options.width <= 0 || options.height <= 0 || options.width > kMaxPlotDimension ||
        options.height > kMaxPlotDimension) {
        throw std::invalid_argument("plot dimensions out of range");
    }
    const double r = frame.radius();

    Box box;
    for (const Point2& c : world_circles) {
        box.add(c.x - r, c.y - r);
        box.add(c.x + r, c.y + r);
    }
    for (const UnitCircle& c : envelope.circles()) {
        const Point2 w = frame.from_canonical(c.center);
        box.add(w.x - r, w.y - r);
        box.add(w.x + r, w.y + r);
    }
    if (!box.valid()) box = Box{-1.0, -1.0, 1.0, 1.0};

    const double w = options.width;
    const double h = options.height;
    const double margin = std::clamp(options.margin, 0.0, 0.25 * std::min(w, h));
    const double span_x = std::max(box.x1 - box.x0, std::numeric_limits<double>::min());
    const double span_y = std::max(box.y1 - box.y0, std::numeric_limits<double>::min());
    const double scale = std::min((w - 2 * margin) / span_x, (h - 2 * margin) / span_y);
    const double tx = margin + 0.5 * ((w - 2 * margin) - scale * span_x) - scale * box.x0;
    const double ty = h - margin - 0.5 * ((h - 2 * margin) - scale * span_y) + scale * box.y0;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width
        << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << ' '
        << options.height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<g id=\"world\" transform=\"matrix(" << num(scale) << " 0 0 " << num(-scale) << ' '
        << num(tx) << ' ' << num(ty) << ")\">\n";

    // Axes through the origin, pushed to the box edge when it is off-screen.
    const double ax = std::clamp(0.0, box.x0, box.x1);
    const double ay = std::clamp(0.0, box.y0, box.y1);
    svg << "<g id=\"axes\" stroke=\"#808080\" stroke-width=\"1\" "
           "vector-effect=\"non-scaling-stroke\">\n"
        << "<line class=\"axis\" x1=\"" << num(box.x0) << "\" y1=\"" << num(ay) << "\" x2=\""
        << num(box.x1) << "\" y2=\"" << num(ay) << "\" vector-effect=\"non-scaling-stroke\"/>\n"
        << "<line class=\"axis\" x1=\"" << num(ax) << "\" y1=\"" << num(box.y0) << "\" x2=\""
        << num(ax) << "\" y2=\"" << num(box.y1) << "\" vector-effect=\"non-scaling-stroke\"/>\n"
        << "</g>\n";

    svg << "<g id=\"circles\" fill=\"none\" stroke=\"blue\" stroke-width=\"1\">\n";
    for (const Point2& c : world_circles) {
        svg << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"" << num(r)
            << "\" vector-effect=\"non-scaling-stroke\"/>\n";
    }
    svg << "</g>\n";

    svg << "<g id=\"envelope\" fill=\"none\" stroke=\"red\" stroke-width=\"2\">\n";
    const auto& table = envelope.circles();
    for (const Arc& arc : arcs(envelope)) {
        const UnitCircle& c = table[arc.circle];
        // Split at the apex so no piece spans more than a quarter turn.
        std::vector<double> cuts{arc.x_start};
        if (arc.x_start < c.center.x && c.center.x < arc.x_end) cuts.push_back(c.center.x);
        cuts.push_back(arc.x_end);

        svg << "<path class=\"envelope\" d=\"";
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
            const Point2 a = extremal_point(cuts[k], upper_arc_height(c, cuts[k]), frame);
            const Point2 b = extremal_point(cuts[k + 1], upper_arc_height(c, cuts[k + 1]), frame);
            if (k > 0) svg << ' ';
            // Left-to-right along an upper arc is clockwise in y-up coordinates.
            svg << "M " << num(a.x) << ' ' << num(a.y) << " A " << num(r) << ' ' << num(r)
                << " 0 0 0 " << num(b.x) << ' ' << num(b.y);
        }
        svg << "\" vector-effect=\"non-scaling-stroke\"/>\n";
    }
    svg << "</g>\n</g>\n</svg>\n";
    return svg.str();
}

}  // namespace uenv::io
