#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "upper_envelope/geometry.hpp"

namespace uenv {

class Envelope;
struct BuildStats;

namespace detail {
// Sweep over a table already strictly increasing in x; no validation.
Envelope build_sorted(std::vector<UnitCircle> table, BuildStats* stats);
}  // namespace detail

struct BuildStats {
    std::size_t input = 0;       // circles after preparation
    std::size_t insertions = 0;  // pushes onto a segment
    std::size_t removals = 0;    // pops by the overshadow loop
    std::size_t midpoint_fallbacks = 0;
};

/// A horizontally continuous run of the boundary. circles[k] owns the
/// interval between transitions[k-1] and transitions[k]; the outer ends
/// are bounded by the segment domain.
struct Segment {
    std::vector<std::size_t> circles;
    std::vector<double> transitions;

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Ordered, horizontally disjoint segments over a sorted, deduplicated
/// circle table. Immutable once constructed.
class Envelope {
public:
    Envelope() = default;

    /// Validates the segment tables against the circle table and throws
    /// InvalidEnvelope on any broken invariant.
    Envelope(std::vector<UnitCircle> circles, std::vector<Segment> segments);

    const std::vector<UnitCircle>& circles() const { return circles_; }
    const std::vector<Segment>& segments() const { return segments_; }
    bool empty() const { return segments_.empty(); }

    /// Number of circles that own part of the boundary.
    std::size_t contributing_count() const;

    friend bool operator==(const Envelope&, const Envelope&) = default;

private:
    struct Trusted {};
    Envelope(Trusted, std::vector<UnitCircle> circles, std::vector<Segment> segments);

    friend Envelope detail::build_sorted(std::vector<UnitCircle>, BuildStats*);

    std::vector<UnitCircle> circles_;
    std::vector<Segment> segments_;
};

struct PreparedCircles {
    std::vector<UnitCircle> circles;
    std::vector<std::size_t> source;  // index into the raw input for each circle
};

/// Sorts by x (ties by descending y) and keeps the highest circle of every
/// exact-x run. Throws NonFiniteInput.
std::vector<UnitCircle> prepare_circles(std::span<const Point2> raw);

/// As prepare_circles, also reporting which raw point each survivor came from.
PreparedCircles prepare_circles_indexed(std::span<const Point2> raw);

/// Builds the upper envelope. When `prepared` is false the input is run
/// through prepare_circles first; when true it must already be strictly
/// increasing in x.
Envelope build_envelope(std::span<const UnitCircle> circles, bool prepared = false,
                        BuildStats* stats = nullptr);

Envelope build_envelope(std::span<const Point2> raw, BuildStats* stats = nullptr);

struct Arc {
    std::size_t circle = 0;
    double x_start = 0.0;
    double x_end = 0.0;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// One arc per contributing circle, left to right over the whole envelope.
std::vector<Arc> arcs(const Envelope& envelope);

}  // namespace uenv
