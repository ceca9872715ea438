#pragma once

// Diagram of an ordering: one horizontal bar per interval,
// earlier intervals higher up, exposed parts dashed.

#include <string>
#include <vector>

#include "ivo/instance.hpp"

namespace ivo {

struct SvgSegment {
    Interval span;  // instance coordinates
    Rat x_from;     // pixel coordinates, exact before rounding
    Rat x_to;
    bool exposed = false;
};

struct SvgBar {
    std::size_t interval = 0;  // index into the instance
    std::size_t position = 0;  // ordering position, 0 at the top
    Rat y;
    std::vector<SvgSegment> segments;  // left to right
};

struct SvgRendering {
    Rat width;
    Rat height;
    Rat margin;
    Rat x_origin;  // instance coordinate drawn at x = margin
    Rat x_scale;   // pixels per unit length
    std::vector<SvgBar> bars;
};

/// Throws InputError if `ord` is not a permutation.
SvgRendering layout_svg(const Instance& inst, const Ordering& ord, Rat width = Rat{800});

/// SVG 1.1 document; byte-stable for equal layouts.
std::string render_svg(const SvgRendering& layout);

}  // namespace ivo
