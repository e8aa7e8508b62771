#pragma once

#include <optional>
#include <span>

#include "upper_envelope/geometry.hpp"

// Brute-force references for verification. Nothing here is used by the
// envelope construction or query path, and none of it calls into them.
namespace uenv::oracle {

/// Maximum over all circles with |x - x_i| <= 1 of the upper arc height,
/// by linear scan; nullopt when no circle covers x.
std::optional<double> brute_force_evaluate(std::span<const UnitCircle> circles, double x);

struct ScanOutcome {
    double position = 0.0;  // x where ownership passes from cj to ci
    int switches = 0;       // owner changes observed, counting the domain ends
};

/// Walks the common domain [x_i - 1, x_j + 1] at the given resolution and
/// records where the higher upper arc changes from cj to ci. Outside the
/// common domain only cj (left) or ci (right) exists, so the walk starts
/// owned by cj and ends owned by ci. Points where the arcs agree within
/// 1e-12 keep the previous owner. Returns nullopt when the circles do not
/// overlap horizontally.
///
/// Throws MultipleSwitches if ownership changes more than once, and
/// std::invalid_argument unless x_j < x_i and resolution > 0.
std::optional<ScanOutcome> scan_transition_detailed(const UnitCircle& cj, const UnitCircle& ci,
                                                    double resolution);

std::optional<double> scan_transition(const UnitCircle& cj, const UnitCircle& ci,
                                      double resolution);

}  // namespace uenv::oracle
