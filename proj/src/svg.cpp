#include "ivo/svg.hpp"

#include <cstdio>
#include <sstream>

namespace ivo {

namespace {

const Rat kBarGap{24};
const Rat kMargin{20};

std::string px(const Rat& v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v.to_double());
    return buf;
}

}  // namespace

SvgRendering layout_svg(const Instance& inst, const Ordering& ord, Rat width) {
    const OrderingCost oc = cost_of_ordering(inst, ord);
    SvgRendering out;
    out.width = width;
    out.margin = kMargin;
    out.height = kMargin * Rat{2} + kBarGap * Rat(static_cast<long long>(inst.size()));
    out.x_scale = Rat{1};
    if (inst.empty()) return out;

    const Interval hull = covered_area(inst.intervals).hull();
    out.x_origin = hull.start();
    out.x_scale = (width - kMargin * Rat{2}) / hull.length();
    auto to_px = [&](const Rat& x) { return kMargin + (x - out.x_origin) * out.x_scale; };

    for (std::size_t p = 0; p < ord.size(); ++p) {
        const Interval& iv = inst.intervals[ord[p]];
        SvgBar bar;
        bar.interval = ord[p];
        bar.position = p;
        bar.y = kMargin + kBarGap * Rat(static_cast<long long>(p)) + kBarGap / Rat{2};
        Rat cursor = iv.start();
        auto emit = [&](const Rat& from, const Rat& to, bool exposed) {
            if (from < to) bar.segments.push_back({Interval(from, to), to_px(from), to_px(to), exposed});
        };
        for (const auto& piece : oc.exposed[p].components()) {
            emit(cursor, piece.start(), false);
            emit(piece.start(), piece.end(), true);
            cursor = piece.end();
        }
        emit(cursor, iv.end(), false);
        out.bars.push_back(std::move(bar));
    }
    return out;
}

std::string render_svg(const SvgRendering& layout) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << px(layout.width)
       << "\" height=\"" << px(layout.height) << "\" viewBox=\"0 0 " << px(layout.width) << ' '
       << px(layout.height) << "\">\n"
       << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& bar : layout.bars) {
        os << "  <g id=\"interval-" << bar.interval + 1 << "\">\n";
        for (const auto& s : bar.segments) {
            os << "    <line x1=\"" << px(s.x_from) << "\" y1=\"" << px(bar.y) << "\" x2=\"" << px(s.x_to)
               << "\" y2=\"" << px(bar.y) << "\" stroke=\"black\" stroke-width=\"3\"";
            if (s.exposed) os << " stroke-dasharray=\"6,4\" class=\"exposed\"";
            os << " data-from=\"" << s.span.start() << "\" data-to=\"" << s.span.end() << "\"/>\n";
        }
        os << "    <text x=\"" << px(bar.segments.front().x_from) << "\" y=\"" << px(bar.y - Rat{6})
           << "\" font-size=\"10\" font-family=\"monospace\">" << bar.interval + 1 << "</text>\n";
        os << "  </g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace ivo
