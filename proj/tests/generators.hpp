#pragma once

// Seeded random instance generators shared by the unit and acceptance suites.

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "upper_envelope/geometry.hpp"

namespace uenv::testing {

inline std::vector<Point2> random_centers(std::mt19937_64& rng, std::size_t n, double width = 100.0,
                                          double height = 10.0) {
    std::uniform_real_distribution<double> ux(0.0, width);
    std::uniform_real_distribution<double> uy(0.0, height);
    std::vector<Point2> pts(n);
    for (auto& p : pts) p = {ux(rng), uy(rng)};
    return pts;
}

/// Pair with 0 < x_i - x_j < 2, heights within +-1.5 of each other.
inline std::pair<UnitCircle, UnitCircle> random_overlapping_pair(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> base(-50.0, 50.0);
    std::uniform_real_distribution<double> gap(1e-3, 2.0 - 1e-3);
    std::uniform_real_distribution<double> lift(-1.5, 1.5);
    const double xj = base(rng);
    const double yj = base(rng) * 0.1;
    return {UnitCircle{{xj, yj}}, UnitCircle{{xj + gap(rng), yj + lift(rng)}}};
}

/// Pair whose centers are strictly between 1e-9 and 2 apart, in any relative position.
inline std::pair<UnitCircle, UnitCircle> random_intersecting_pair(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> base(-50.0, 50.0);
    std::uniform_real_distribution<double> dist(1e-6, 2.0 - 1e-6);
    std::uniform_real_distribution<double> angle(-1.5707963267948966, 1.5707963267948966);
    const Point2 cj{base(rng), base(rng)};
    double a = angle(rng);
    const double d = dist(rng);
    Point2 ci{cj.x + d * std::cos(a), cj.y + d * std::sin(a)};
    if (!(cj.x < ci.x)) ci.x = std::nextafter(cj.x, 1e300);
    return {UnitCircle{cj}, UnitCircle{ci}};
}

}  // namespace uenv::testing
