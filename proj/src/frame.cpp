#include "upper_envelope/frame.hpp"

#include <cmath>

#include "upper_envelope/errors.hpp"

namespace uenv {

DirectionalFrame make_frame(double radius, const Point2& direction) {
    if (!std::isfinite(radius) || !is_finite(direction)) {
        throw InvalidFrame("frame parameters must be finite");
    }
    if (!(radius > 0.0)) throw InvalidFrame("radius must be positive");
    const double norm = std::hypot(direction.x, direction.y);
    if (!(norm > 0.0)) throw InvalidFrame("direction must be nonzero");
    return DirectionalFrame(radius, Point2{direction.x / norm, direction.y / norm});
}

Point2 DirectionalFrame::to_canonical(const Point2& world) const {
    const double dx = direction_.x;
    const double dy = direction_.y;
    const Point2 rotated{dy * world.x - dx * world.y, dx * world.x + dy * world.y};
    return {rotated.x / radius_, rotated.y / radius_};
}

Point2 DirectionalFrame::from_canonical(const Point2& canonical) const {
    const double dx = direction_.x;
    const double dy = direction_.y;
    const Point2 scaled{canonical.x * radius_, canonical.y * radius_};
    return {dy * scaled.x + dx * scaled.y, -dx * scaled.x + dy * scaled.y};
}

std::vector<Point2> to_canonical_serial(std::span<const Point2> points,
                                        const DirectionalFrame& frame) {
    std::vector<Point2> out;
    out.reserve(points.size());
    for (const Point2& p : points) {
        require_finite(p, "input point");
        out.push_back(frame.to_canonical(p));
    }
    return out;
}

std::vector<Point2> to_canonical(std::span<const Point2> points, const DirectionalFrame& frame) {
    for (const Point2& p : points) require_finite(p, "input point");
    std::vector<Point2> out(points.size());
    const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        out[k] = frame.to_canonical(points[k]);
    }
    return out;
}

std::vector<Point2> from_canonical(std::span<const Point2> points, const DirectionalFrame& frame) {
    std::vector<Point2> out;
    out.reserve(points.size());
    for (const Point2& p : points) {
        require_finite(p, "canonical point");
        out.push_back(frame.from_canonical(p));
    }
    return out;
}

Point2 extremal_point(double canonical_x, double canonical_y, const DirectionalFrame& frame) {
    const Point2 canonical{canonical_x, canonical_y};
    require_finite(canonical, "canonical boundary point");
    return frame.from_canonical(canonical);
}

}  // namespace uenv
