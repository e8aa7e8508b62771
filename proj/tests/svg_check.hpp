#pragma once

// Reads back the plot written by io::render_plot: the world-to-pixel
// matrix and the red envelope arcs, converted from SVG endpoint
// parameterisation to centre form.

#include <cmath>
#include <limits>
#include <numbers>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "upper_envelope/geometry.hpp"

namespace uenv::testing {

struct SvgArc {
    Point2 start, end, center;
    double radius = 0.0;
    double theta = 0.0;  // start angle
    double sweep = 0.0;  // signed angular extent
};

struct ParsedPlot {
    double scale = 0.0;  // matrix(s 0 0 -s tx ty)
    double tx = 0.0;
    double ty = 0.0;
    std::vector<SvgArc> arcs;
    std::size_t circles = 0;
};

inline double angle_between(double ux, double uy, double vx, double vy) {
    return std::atan2(ux * vy - uy * vx, ux * vx + uy * vy);
}

inline SvgArc arc_from_endpoints(Point2 p1, Point2 p2, double r, bool large, bool sweep) {
    const double x1p = 0.5 * (p1.x - p2.x);
    const double y1p = 0.5 * (p1.y - p2.y);
    const double q = x1p * x1p + y1p * y1p;
    double radius = r;
    if (q > r * r) radius = std::sqrt(q);  // out-of-range radii scale up
    const double rad = std::max(0.0, (radius * radius - q) / q);
    const double coef = (large != sweep ? 1.0 : -1.0) * std::sqrt(rad);
    const double cxp = coef * y1p;
    const double cyp = -coef * x1p;
    SvgArc a;
    a.start = p1;
    a.end = p2;
    a.radius = radius;
    a.center = {cxp + 0.5 * (p1.x + p2.x), cyp + 0.5 * (p1.y + p2.y)};
    const double ux = (x1p - cxp) / radius, uy = (y1p - cyp) / radius;
    const double vx = (-x1p - cxp) / radius, vy = (-y1p - cyp) / radius;
    a.theta = std::atan2(uy, ux);
    a.sweep = angle_between(ux, uy, vx, vy);
    if (!sweep && a.sweep > 0) a.sweep -= 2 * std::numbers::pi;
    if (sweep && a.sweep < 0) a.sweep += 2 * std::numbers::pi;
    return a;
}

inline double distance_to_arc(const SvgArc& a, const Point2& p) {
    const double dx = p.x - a.center.x;
    const double dy = p.y - a.center.y;
    double phi = std::atan2(dy, dx) - a.theta;
    // Normalise into the sweep's direction.
    const double two_pi = 2 * std::numbers::pi;
    if (a.sweep >= 0) {
        phi = std::fmod(std::fmod(phi, two_pi) + two_pi, two_pi);
        if (phi <= a.sweep) return std::abs(std::hypot(dx, dy) - a.radius);
    } else {
        phi = -std::fmod(std::fmod(-phi, two_pi) + two_pi, two_pi);
        if (phi >= a.sweep) return std::abs(std::hypot(dx, dy) - a.radius);
    }
    return std::min(std::hypot(p.x - a.start.x, p.y - a.start.y),
                    std::hypot(p.x - a.end.x, p.y - a.end.y));
}

inline ParsedPlot parse_plot(const std::string& svg) {
    ParsedPlot out;
    std::smatch m;
    const std::regex matrix(R"re(transform="matrix\(([^ ]+) 0 0 ([^ ]+) ([^ ]+) ([^ )]+)\)")re");
    if (std::regex_search(svg, m, matrix)) {
        out.scale = std::stod(m[1]);
        out.tx = std::stod(m[3]);
        out.ty = std::stod(m[4]);
    }
    const std::regex path(R"re(<path class="envelope" d="([^"]*)")re");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), path); it != std::sregex_iterator();
         ++it) {
        std::istringstream d((*it)[1].str());
        std::string cmd;
        while (d >> cmd) {
            if (cmd != "M") break;
            Point2 p1, p2;
            std::string a;
            double rx = 0, ry = 0, rot = 0;
            int large = 0, sweep = 0;
            d >> p1.x >> p1.y >> a >> rx >> ry >> rot >> large >> sweep >> p2.x >> p2.y;
            if (a != "A") break;
            out.arcs.push_back(arc_from_endpoints(p1, p2, rx, large != 0, sweep != 0));
        }
    }
    const std::regex circle("<circle ");
    out.circles = std::distance(std::sregex_iterator(svg.begin(), svg.end(), circle),
                                std::sregex_iterator());
    return out;
}

/// Pixel distance from a world point to the nearest red arc.
inline double pixel_distance(const ParsedPlot& plot, const Point2& world) {
    double best = std::numeric_limits<double>::infinity();
    for (const SvgArc& a : plot.arcs) best = std::min(best, distance_to_arc(a, world));
    return best * plot.scale;
}

}  // namespace uenv::testing
