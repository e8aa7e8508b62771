#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "upper_envelope/builder.hpp"

namespace uenv {

struct QueryResult {
    bool defined = false;
    double y = 0.0;
    std::size_t circle_index = 0;  // row of Envelope::circles()

    friend bool operator==(const QueryResult&, const QueryResult&) = default;
};

/// Comparisons spent in the two binary searches of a single query.
struct QueryStats {
    std::size_t segment_comparisons = 0;
    std::size_t transition_comparisons = 0;
    std::size_t segments_searched = 0;     // S
    std::size_t transitions_searched = 0;  // T of the hit segment, 0 on a miss

    std::size_t total() const { return segment_comparisons + transition_comparisons; }
};

/// Closed horizontal domain [lo, hi] of a non-empty segment.
std::pair<double, double> segment_domain(const Segment& segment,
                                         std::span<const UnitCircle> circles);

/// Segment whose closed domain contains x. Where two tangential segments
/// share an end point the right-hand one is returned.
std::optional<std::size_t> find_segment(const Envelope& envelope, double x,
                                        QueryStats* stats = nullptr);

/// Upper boundary at x. Transition intervals are half-open on the right
/// ([t_k, t_{k+1})); at a position that coincides exactly with a transition
/// or a shared segment end both neighbours are evaluated and the higher wins.
/// Throws NonFiniteQuery.
QueryResult evaluate(const Envelope& envelope, double x, QueryStats* stats = nullptr);

/// Batch evaluation, parallelised over the queries with OpenMP.
std::vector<QueryResult> evaluate_many(const Envelope& envelope, std::span<const double> xs);

/// Serial reference for evaluate_many; results are identical element for element.
std::vector<QueryResult> evaluate_many_serial(const Envelope& envelope,
                                              std::span<const double> xs);

/// from, from + step, ... up to and always including `to`.
/// Throws InvalidRange (also for grids above kMaxSamples entries).
std::vector<double> sample_grid(double from, double to, double step);

inline constexpr std::size_t kMaxSamples = std::size_t{1} << 28;

struct Sample {
    double x = 0.0;
    QueryResult result;
};

std::vector<Sample> sample(const Envelope& envelope, double from, double to, double step);

/// sample() over evaluate_many.
std::vector<Sample> sample_parallel(const Envelope& envelope, double from, double to,
                                    double step);

}  // namespace uenv
