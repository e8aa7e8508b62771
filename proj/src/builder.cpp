#include "upper_envelope/builder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/sort/pdqsort/pdqsort.hpp>

#include "upper_envelope/errors.hpp"

namespace uenv {

namespace {

void fail(const std::string& what) { throw InvalidEnvelope(what); }

void validate(const std::vector<UnitCircle>& circles, const std::vector<Segment>& segments) {
    for (std::size_t k = 0; k < circles.size(); ++k) {
        if (!is_finite(circles[k].center)) fail("circle " + std::to_string(k) + " is not finite");
        if (k > 0 && !(circles[k - 1].center.x < circles[k].center.x)) {
            fail("circle table is not strictly increasing in x at row " + std::to_string(k));
        }
    }

    bool have_previous = false;
    std::size_t previous_index = 0;
    for (std::size_t s = 0; s < segments.size(); ++s) {
        const Segment& seg = segments[s];
        const std::string where = "segment " + std::to_string(s);
        if (seg.circles.empty()) fail(where + " is empty");
        if (seg.transitions.size() + 1 != seg.circles.size()) {
            fail(where + " has mismatched transition count");
        }
        for (std::size_t idx : seg.circles) {
            if (idx >= circles.size()) fail(where + " references a missing circle");
            if (have_previous && idx <= previous_index) {
                fail(where + " repeats or reorders circle indices");
            }
            have_previous = true;
            previous_index = idx;
        }
        if (s > 0) {
            // Tangential neighbours may share a domain end point.
            const double prev_x = circles[segments[s - 1].circles.back()].center.x;
            if (prev_x + 2.0 > circles[seg.circles.front()].center.x) {
                fail(where + " overlaps the previous segment");
            }
        }
        for (std::size_t k = 0; k < seg.transitions.size(); ++k) {
            const double t = seg.transitions[k];
            const double left = circles[seg.circles[k]].center.x;
            const double right = circles[seg.circles[k + 1]].center.x;
            // Exactly 2 only arises when a dominated middle circle bridged the pair.
            if (right - left > 2.0) fail(where + " joins circles without overlap");
            if (!std::isfinite(t) || t < right - 1.0 || t > left + 1.0) {
                fail(where + " has a transition outside the overlap of its circles");
            }
            if (k > 0 && !(seg.transitions[k - 1] < t)) {
                fail(where + " transitions are not strictly increasing");
            }
        }
    }
}

}  // namespace

Envelope::Envelope(std::vector<UnitCircle> circles, std::vector<Segment> segments) {
    validate(circles, segments);
    circles_ = std::move(circles);
    segments_ = std::move(segments);
}

Envelope::Envelope(Trusted, std::vector<UnitCircle> circles, std::vector<Segment> segments)
    : circles_(std::move(circles)), segments_(std::move(segments)) {}

std::size_t Envelope::contributing_count() const {
    std::size_t total = 0;
    for (const Segment& seg : segments_) total += seg.circles.size();
    return total;
}

PreparedCircles prepare_circles_indexed(std::span<const Point2> raw) {
    for (const Point2& p : raw) require_finite(p, "input point");

    struct Entry {
        Point2 p;
        std::size_t source;
    };
    std::vector<Entry> entries(raw.size());
    for (std::size_t k = 0; k < raw.size(); ++k) entries[k] = {raw[k], k};
    // Ascending x, descending y; the source index breaks the remaining tie so
    // the result does not depend on sort stability.
    const auto by_x_then_high_y = [](const Entry& a, const Entry& b) {
        if (a.p.x != b.p.x) return a.p.x < b.p.x;
        if (a.p.y != b.p.y) return a.p.y > b.p.y;
        return a.source < b.source;
    };
    boost::sort::pdqsort_branchless(entries.begin(), entries.end(), by_x_then_high_y);

    PreparedCircles out;
    out.circles.reserve(entries.size());
    out.source.reserve(entries.size());
    for (const Entry& e : entries) {
        if (!out.circles.empty() && out.circles.back().center.x == e.p.x) continue;
        out.circles.push_back(UnitCircle{e.p});
        out.source.push_back(e.source);
    }
    return out;
}

std::vector<UnitCircle> prepare_circles(std::span<const Point2> raw) {
    for (const Point2& p : raw) require_finite(p, "input point");
    std::vector<UnitCircle> circles(raw.begin(), raw.end());
    // Identical points are interchangeable, so no index tie-break is needed.
    const auto by_x_then_high_y = [](const UnitCircle& a, const UnitCircle& b) {
        if (a.center.x != b.center.x) return a.center.x < b.center.x;
        return a.center.y > b.center.y;
    };
    boost::sort::pdqsort_branchless(circles.begin(), circles.end(), by_x_then_high_y);
    const auto last = std::unique(circles.begin(), circles.end(),
                                  [](const UnitCircle& a, const UnitCircle& b) {
                                      return a.center.x == b.center.x;
                                  });
    circles.erase(last, circles.end());
    return circles;
}

Envelope detail::build_sorted(std::vector<UnitCircle> table, BuildStats* stats) {
    BuildStats local;
    local.input = table.size();
    std::vector<Segment> segments;

    for (std::size_t i = 0; i < table.size(); ++i) {
        const UnitCircle& current = table[i];
        if (segments.empty()) {
            segments.push_back(Segment{{i}, {}});
            ++local.insertions;
            continue;
        }
        Segment* seg = &segments.back();
        TransitionOutcome step = transition_position(table[seg->circles.back()], current);
        if (step.is_gap()) {
            segments.push_back(Segment{{i}, {}});
            ++local.insertions;
            continue;
        }

        double x_u = step.x;
        while (!seg->transitions.empty() && seg->transitions.back() >= x_u) {
            seg->circles.pop_back();
            seg->transitions.pop_back();
            ++local.removals;

            const UnitCircle& tail = table[seg->circles.back()];
            step = transition_position(tail, current);
            if (step.is_gap()) {
                // The popped circle bridged the pair; only roundoff or exact
                // tangency lands here.
                x_u = 0.5 * (tail.center.x + current.center.x);
                ++local.midpoint_fallbacks;
            } else {
                x_u = step.x;
            }
        }
        seg->transitions.push_back(x_u);
        seg->circles.push_back(i);
        ++local.insertions;
    }

    if (stats) *stats = local;
    return Envelope(Envelope::Trusted{}, std::move(table), std::move(segments));
}

Envelope build_envelope(std::span<const UnitCircle> circles, bool prepared, BuildStats* stats) {
    if (!prepared) {
        std::vector<Point2> raw;
        raw.reserve(circles.size());
        for (const UnitCircle& c : circles) raw.push_back(c.center);
        return detail::build_sorted(prepare_circles(raw), stats);
    }
    for (std::size_t k = 0; k < circles.size(); ++k) {
        require_finite(circles[k].center, "circle center");
        if (k > 0 && !(circles[k - 1].center.x < circles[k].center.x)) {
            throw std::invalid_argument("prepared circles must be strictly increasing in x");
        }
    }
    return detail::build_sorted(std::vector<UnitCircle>(circles.begin(), circles.end()), stats);
}

Envelope build_envelope(std::span<const Point2> raw, BuildStats* stats) {
    return detail::build_sorted(prepare_circles(raw), stats);
}

std::vector<Arc> arcs(const Envelope& envelope) {
    std::vector<Arc> out;
    out.reserve(envelope.contributing_count());
    const auto& table = envelope.circles();
    for (const Segment& seg : envelope.segments()) {
        const double lo = table[seg.circles.front()].center.x - 1.0;
        const double hi = table[seg.circles.back()].center.x + 1.0;
        for (std::size_t k = 0; k < seg.circles.size(); ++k) {
            const double start = k == 0 ? lo : seg.transitions[k - 1];
            const double end = k + 1 == seg.circles.size() ? hi : seg.transitions[k];
            out.push_back(Arc{seg.circles[k], start, end});
        }
    }
    return out;
}

}  // namespace uenv
