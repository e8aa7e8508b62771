#include "upper_envelope/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "upper_envelope/errors.hpp"

namespace uenv {

bool is_finite(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

void require_finite(const Point2& p, const char* what) {
    if (!is_finite(p)) {
        throw NonFiniteInput(std::string(what) + " has a non-finite coordinate");
    }
}

double center_distance(const UnitCircle& cj, const UnitCircle& ci) {
    require_finite(cj.center, "circle center");
    require_finite(ci.center, "circle center");
    const double dx = ci.center.x - cj.center.x;
    const double dy = ci.center.y - cj.center.y;
    return std::sqrt(dx * dx + dy * dy);
}

std::optional<Point2> upper_intersection(const UnitCircle& cj, const UnitCircle& ci) {
    const double d = center_distance(cj, ci);
    if (d <= kCoincidentDistance || d >= 2.0) {
        return std::nullopt;
    }
    const double dx = ci.center.x - cj.center.x;
    const double dy = ci.center.y - cj.center.y;

    const Point2 mid{0.5 * (cj.center.x + ci.center.x), 0.5 * (cj.center.y + ci.center.y)};
    // Normal to the center line; points upward because dx > 0.
    const Point2 normal{-dy / d, dx / d};
    const double half = 0.5 * d;
    const double h = std::sqrt(std::max(0.0, 1.0 - half * half));
    return Point2{mid.x + h * normal.x, mid.y + h * normal.y};
}

double upper_arc_height(const UnitCircle& c, double x) {
    const double dx = x - c.center.x;
    if (std::abs(dx) < 1.0) {
        return c.center.y + std::sqrt(std::clamp(1.0 - dx * dx, 0.0, 1.0));
    }
    return c.center.y;
}

TransitionOutcome transition_position(const UnitCircle& cj, const UnitCircle& ci) {
    require_finite(cj.center, "circle center");
    require_finite(ci.center, "circle center");
    const double xj = cj.center.x;
    const double xi = ci.center.x;
    if (xj + 2.0 <= xi) {
        return {TransitionKind::Gap, 0.0};
    }
    const double lo = xi - 1.0;
    const double hi = xj + 1.0;

    const double yj = cj.center.y;
    const double yi = ci.center.y;
    if (const auto up = upper_intersection(cj, ci); up && std::max(yj, yi) < up->y) {
        // Above both centers the point is on both upper halves; clamp only
        // absorbs roundoff at the overlap ends.
        return {TransitionKind::UpperIntersection, std::clamp(up->x, lo, hi)};
    }
    return {TransitionKind::Overshadow, yj < yi ? lo : hi};
}

}  // namespace uenv
