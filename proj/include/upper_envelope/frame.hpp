#pragma once

#include <span>
#include <vector>

#include "upper_envelope/geometry.hpp"

namespace uenv {

/// Maps circles of a common radius with an arbitrary extremal direction
/// onto the canonical setting (unit radius, extremal direction +y).
///
/// The rotation is the proper rotation taking `direction` to (0, 1);
/// canonical +x corresponds to the world axis (dy, -dx). World-to-canonical
/// rotates first and divides by the radius second.
class DirectionalFrame {
public:
    /// Identity frame: radius 1, direction (0, 1).
    DirectionalFrame() = default;

    double radius() const { return radius_; }
    const Point2& direction() const { return direction_; }

    /// World unit vector along canonical +x.
    Point2 lateral_axis() const { return {direction_.y, -direction_.x}; }

    Point2 to_canonical(const Point2& world) const;
    Point2 from_canonical(const Point2& canonical) const;

    friend bool operator==(const DirectionalFrame&, const DirectionalFrame&) = default;

private:
    friend DirectionalFrame make_frame(double radius, const Point2& direction);

    DirectionalFrame(double radius, const Point2& unit_direction)
        : radius_(radius), direction_(unit_direction) {}

    double radius_ = 1.0;
    Point2 direction_{0.0, 1.0};
};

/// Throws InvalidFrame for radius <= 0, a zero direction, or non-finite input.
DirectionalFrame make_frame(double radius, const Point2& direction);

/// Parallel over the points (OpenMP). Throws NonFiniteInput.
std::vector<Point2> to_canonical(std::span<const Point2> points, const DirectionalFrame& frame);

/// Serial reference for to_canonical; identical results.
std::vector<Point2> to_canonical_serial(std::span<const Point2> points,
                                        const DirectionalFrame& frame);

std::vector<Point2> from_canonical(std::span<const Point2> points, const DirectionalFrame& frame);

/// World position of a canonical boundary sample (scale by radius, then
/// rotate +y back onto the frame direction). Throws NonFiniteInput.
Point2 extremal_point(double canonical_x, double canonical_y, const DirectionalFrame& frame);

}  // namespace uenv
