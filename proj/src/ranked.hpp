#pragma once

// Rank-space helpers shared by the enumerators and the dynamic program.
// A RankedPart is a canonical union over grid ranks: sorted spans with a
// strictly positive gap between consecutive spans.

#include <algorithm>
#include <optional>
#include <vector>

#include "ivo/covered.hpp"
#include "ivo/geometry.hpp"
#include "ivo/grid.hpp"

namespace ivo::detail {

using RankedPart = std::vector<Span>;

inline RankedPart subtract(const RankedPart& part, Span cut) {
    RankedPart out;
    out.reserve(part.size() + 1);
    for (auto [lo, hi] : part) {
        if (hi <= cut.first || cut.second <= lo) {
            out.push_back({lo, hi});
            continue;
        }
        if (lo < cut.first) out.push_back({lo, cut.first});
        if (cut.second < hi) out.push_back({cut.second, hi});
    }
    return out;
}

inline RankedPart clip(const RankedPart& part, Span window) {
    RankedPart out;
    for (auto [lo, hi] : part) {
        int a = std::max(lo, window.first);
        int b = std::min(hi, window.second);
        if (a < b) out.push_back({a, b});
    }
    return out;
}

/// Canonical union of arbitrary spans.
inline RankedPart unite(std::vector<Span> spans) {
    std::sort(spans.begin(), spans.end());
    RankedPart out;
    for (auto s : spans) {
        if (!out.empty() && s.first <= out.back().second) {
            out.back().second = std::max(out.back().second, s.second);
        } else {
            out.push_back(s);
        }
    }
    return out;
}

inline DisjointUnion to_union(const RankedPart& part, const Grid& grid) {
    std::vector<Interval> comps;
    comps.reserve(part.size());
    for (auto s : part) comps.push_back(grid.interval(s));
    return DisjointUnion::of(std::move(comps));
}

/// Nullopt when some endpoint is not a grid point.
inline std::optional<RankedPart> to_ranked(const DisjointUnion& u, const Grid& grid) {
    RankedPart out;
    for (const auto& c : u.components()) {
        auto lo = grid.find(c.start());
        auto hi = grid.find(c.end());
        if (!lo || !hi) return std::nullopt;
        out.push_back({*lo, *hi});
    }
    return out;
}

inline Rat ranked_length(const RankedPart& part, const Grid& grid) {
    Rat total;
    for (auto s : part) total += grid.length(s);
    return total;
}

/// Exact membership of a non-empty part in the exposed-part set: every gap
/// between components must be a covered interval, and some input interval
/// must contain the hull with both flanks coverable by intervals lying
/// entirely outside the part.
inline bool realizable(const RankedPart& part, const CoveredIntervalTable& table) {
    if (part.empty()) return false;
    for (std::size_t i = 1; i < part.size(); ++i) {
        if (!table.lookup(Span{part[i - 1].second, part[i].first})) return false;
    }
    const int s = part.front().first;
    const int t = part.back().second;
    const int reach_left = table.left_reach(s);
    const int reach_right = table.right_reach(t);
    for (auto [a, b] : table.interval_spans()) {
        if (a <= s && t <= b && reach_left <= a && b <= reach_right) return true;
    }
    return false;
}

}  // namespace ivo::detail
