#include "upper_envelope/query.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "upper_envelope/errors.hpp"

namespace uenv {

namespace {

// Ties go to the right-hand candidate.
QueryResult higher(const QueryResult& left, const QueryResult& right) {
    return left.y > right.y ? left : right;
}

std::optional<std::size_t> locate_segment(const Envelope& envelope, double x,
                                          QueryStats* stats) {
    const auto& segs = envelope.segments();
    const auto& table = envelope.circles();
    std::size_t comparisons = 0;

    // First segment whose lower end lies strictly right of x.
    const auto it = std::upper_bound(segs.begin(), segs.end(), x,
                                     [&](double value, const Segment& seg) {
                                         ++comparisons;
                                         return value < table[seg.circles.front()].center.x - 1.0;
                                     });
    std::optional<std::size_t> hit;
    if (it != segs.begin()) {
        const Segment& seg = *std::prev(it);
        ++comparisons;
        if (x <= table[seg.circles.back()].center.x + 1.0) {
            hit = static_cast<std::size_t>(std::prev(it) - segs.begin());
        }
    }
    if (stats) {
        stats->segment_comparisons = comparisons;
        stats->segments_searched = segs.size();
    }
    return hit;
}

}  // namespace

std::pair<double, double> segment_domain(const Segment& segment,
                                         std::span<const UnitCircle> circles) {
    return {circles[segment.circles.front()].center.x - 1.0,
            circles[segment.circles.back()].center.x + 1.0};
}

std::optional<std::size_t> find_segment(const Envelope& envelope, double x, QueryStats* stats) {
    if (!std::isfinite(x)) throw NonFiniteQuery("query position is not finite");
    return locate_segment(envelope, x, stats);
}

QueryResult evaluate(const Envelope& envelope, double x, QueryStats* stats) {
    if (!std::isfinite(x)) throw NonFiniteQuery("query position is not finite");
    if (stats) *stats = QueryStats{};

    const auto seg_index = locate_segment(envelope, x, stats);
    if (!seg_index) return {};

    const auto& table = envelope.circles();
    const Segment& seg = envelope.segments()[*seg_index];
    const auto& ts = seg.transitions;

    std::size_t comparisons = 0;
    const auto it = std::upper_bound(ts.begin(), ts.end(), x, [&](double value, double t) {
        ++comparisons;
        return value < t;
    });
    const auto k = static_cast<std::size_t>(it - ts.begin());
    if (stats) {
        stats->transition_comparisons = comparisons;
        stats->transitions_searched = ts.size();
    }

    const std::size_t owner = seg.circles[k];
    QueryResult result{true, upper_arc_height(table[owner], x), owner};

    // Overshadow transitions jump; the point itself belongs to the higher side.
    if (k > 0 && ts[k - 1] == x) {
        const std::size_t left = seg.circles[k - 1];
        result = higher(QueryResult{true, upper_arc_height(table[left], x), left}, result);
    }
    if (k == 0 && *seg_index > 0) {
        const Segment& prev = envelope.segments()[*seg_index - 1];
        const std::size_t left = prev.circles.back();
        if (table[left].center.x + 1.0 == x) {
            result = higher(QueryResult{true, upper_arc_height(table[left], x), left}, result);
        }
    }
    return result;
}

std::vector<QueryResult> evaluate_many_serial(const Envelope& envelope,
                                              std::span<const double> xs) {
    std::vector<QueryResult> out(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) out[k] = evaluate(envelope, xs[k]);
    return out;
}

std::vector<QueryResult> evaluate_many(const Envelope& envelope, std::span<const double> xs) {
    for (double x : xs) {
        if (!std::isfinite(x)) throw NonFiniteQuery("query position is not finite");
    }
    std::vector<QueryResult> out(xs.size());
    const auto n = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        out[k] = evaluate(envelope, xs[k]);
    }
    return out;
}

std::vector<double> sample_grid(double from, double to, double step) {
    if (!std::isfinite(from) || !std::isfinite(to) || !std::isfinite(step)) {
        throw InvalidRange("sampling range must be finite");
    }
    if (from > to) throw InvalidRange("sampling range has from > to");
    if (!(step > 0.0)) throw InvalidRange("sampling step must be positive");

    const double steps = std::floor((to - from) / step);
    if (!(steps < static_cast<double>(kMaxSamples))) {
        throw InvalidRange("sampling grid exceeds " + std::to_string(kMaxSamples) + " entries");
    }
    const auto count = static_cast<std::size_t>(steps);
    std::vector<double> xs;
    xs.reserve(count + 2);
    for (std::size_t k = 0; k <= count; ++k) {
        const double x = from + static_cast<double>(k) * step;
        if (x >= to) break;
        xs.push_back(x);
    }
    xs.push_back(to);
    return xs;
}

std::vector<Sample> sample(const Envelope& envelope, double from, double to, double step) {
    const std::vector<double> xs = sample_grid(from, to, step);
    std::vector<Sample> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(Sample{x, evaluate(envelope, x)});
    return out;
}

std::vector<Sample> sample_parallel(const Envelope& envelope, double from, double to,
                                    double step) {
    const std::vector<double> xs = sample_grid(from, to, step);
    const std::vector<QueryResult> ys = evaluate_many(envelope, xs);
    std::vector<Sample> out(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) out[k] = Sample{xs[k], ys[k]};
    return out;
}

}  // namespace uenv
