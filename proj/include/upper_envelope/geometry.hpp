#pragma once

#include <optional>

namespace uenv {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Unit-radius circle in the canonical frame; the radius is implicit.
struct UnitCircle {
    Point2 center;

    friend bool operator==(const UnitCircle&, const UnitCircle&) = default;
};

/// Centers closer than this are treated as coincident when intersecting.
inline constexpr double kCoincidentDistance = 1e-12;

enum class TransitionKind {
    Gap,               // no horizontal overlap, x is meaningless
    UpperIntersection, // the upper arcs cross above both centers
    Overshadow,        // one arc dominates; ownership passes at a domain end
};

struct TransitionOutcome {
    TransitionKind kind = TransitionKind::Gap;
    double x = 0.0;

    bool is_gap() const { return kind == TransitionKind::Gap; }

    friend bool operator==(const TransitionOutcome&, const TransitionOutcome&) = default;
};

bool is_finite(const Point2& p);

/// Throws NonFiniteInput unless both coordinates are finite.
void require_finite(const Point2& p, const char* what);

double center_distance(const UnitCircle& cj, const UnitCircle& ci);

/// Higher of the two intersection points of two unit circles, or nullopt
/// when the centers are (nearly) coincident or at least 2 apart.
/// Requires cj.center.x < ci.center.x.
std::optional<Point2> upper_intersection(const UnitCircle& cj, const UnitCircle& ci);

/// Height of the circle's upper arc at x. Outside (-1, 1) of the center
/// the center height is returned, so roundoff at domain ends cannot yield NaN.
double upper_arc_height(const UnitCircle& c, double x);

/// Horizontal position where the upper boundary of the pair passes from
/// cj to ci. Tangential contact (x_i - x_j == 2) is a gap. The returned
/// position always lies in [x_i - 1, x_j + 1].
/// Requires cj.center.x < ci.center.x.
TransitionOutcome transition_position(const UnitCircle& cj, const UnitCircle& ci);

}  // namespace uenv
