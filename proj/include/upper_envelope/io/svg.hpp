#pragma once

#include <span>
#include <string>

#include "upper_envelope/builder.hpp"
#include "upper_envelope/frame.hpp"

namespace uenv::io {

struct PlotOptions {
    int width = 800;
    int height = 400;
    double margin = 20.0;  // pixels
};

inline constexpr int kMaxPlotDimension = 1 << 15;

/// SVG 1.1 plot: every circle as a blue outline, the envelope as red arcs,
/// and a pair of grey axes. World coordinates are drawn inside a group
/// whose y-up viewport transform is `matrix(s 0 0 -s tx ty)`.
/// Envelope paths carry class="envelope"; each subpath is "M x y A r r 0 0 0 x y".
std::string render_plot(std::span<const Point2> world_circles, const Envelope& envelope,
                        const DirectionalFrame& frame, const PlotOptions& options = {});

}  // namespace uenv::io
