#include "ivo/exposed.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "ivo/errors.hpp"
#include "ranked.hpp"

namespace ivo {

using detail::RankedPart;

namespace {

ExposedPartSet finish(const std::set<RankedPart>& found, const Grid& grid, EnumerationMode mode) {
    ExposedPartSet out;
    out.mode = mode;
    out.parts.reserve(found.size());
    for (const auto& p : found) out.parts.push_back(detail::to_union(p, grid));
    return out;
}

std::vector<Span> distinct_spans(const CoveredIntervalTable& table) {
    std::vector<Span> spans = table.interval_spans();
    std::sort(spans.begin(), spans.end());
    spans.erase(std::unique(spans.begin(), spans.end()), spans.end());
    return spans;
}

}  // namespace

std::string to_string(EnumerationMode mode) {
    switch (mode) {
        case EnumerationMode::full: return "full";
        case EnumerationMode::oracle: return "oracle";
        case EnumerationMode::intervals: return "intervals";
        case EnumerationMode::super: return "super";
        case EnumerationMode::pairwise: return "pairwise";
        case EnumerationMode::alpha: return "alpha";
        case EnumerationMode::sbound: return "sbound";
    }
    return "?";
}

bool ExposedPartSet::contains(const DisjointUnion& u) const {
    return std::binary_search(parts.begin(), parts.end(), u);
}

ExposedPartSet enumerate_full(const Instance& inst) {
    const Grid grid(inst.intervals);
    const std::size_t n = inst.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return inst.intervals[y].length() < inst.intervals[x].length();
    });

    std::set<RankedPart> known;
    std::vector<Span> seen;
    std::vector<std::size_t> prefix_sizes;
    for (std::size_t k = 0; k < n; ++k) {
        const Span cur = grid.span(inst.intervals[order[k]]);
        const auto [a, b] = cur;

        std::set<RankedPart> next = known;
        for (const auto& e : known) {
            RankedPart rest = detail::subtract(e, cur);
            if (!rest.empty()) next.insert(std::move(rest));
        }

        // Every earlier interval is at least as long, so it covers a prefix,
        // a suffix, all, or nothing of the new one.
        std::vector<int> lefts{a};
        std::vector<int> rights{b};
        for (auto [lo, hi] : seen) {
            if (a < hi && hi < b) lefts.push_back(hi);
            if (a < lo && lo < b) rights.push_back(lo);
        }
        for (int s : lefts) {
            for (int t : rights) {
                if (s < t) next.insert(RankedPart{{s, t}});
            }
        }
        known = std::move(next);
        seen.push_back(cur);
        prefix_sizes.push_back(known.size());
    }
    ExposedPartSet out = finish(known, grid, EnumerationMode::full);
    out.prefix_sizes = std::move(prefix_sizes);
    return out;
}

ExposedPartSet enumerate_oracle(const Instance& inst, std::size_t cap) {
    const std::size_t n = inst.size();
    if (n > cap) {
        throw CapExceeded("exposed-part oracle is capped at " + std::to_string(cap) + " intervals, got " +
                          std::to_string(n));
    }
    std::set<DisjointUnion> found;
    std::vector<bool> used(n, false);
    std::function<void(const DisjointUnion&, std::size_t)> visit = [&](const DisjointUnion& covered,
                                                                       std::size_t depth) {
        if (depth == n) return;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            DisjointUnion piece(inst.intervals[j]);
            DisjointUnion exposed = subtract(piece, covered);
            if (!exposed.empty()) found.insert(exposed);
            used[j] = true;
            visit(unite(covered, piece), depth + 1);
            used[j] = false;
        }
    };
    visit(DisjointUnion{}, 0);
    ExposedPartSet out;
    out.mode = EnumerationMode::oracle;
    out.parts.assign(found.begin(), found.end());
    return out;
}

ExposedPartSet enumerate_interval_parts(const Instance& inst, const CoveredIntervalTable& table) {
    (void)inst;
    const int g = table.grid().size();
    std::set<RankedPart> found;
    for (int s = 0; s < g; ++s) {
        for (int t = s + 1; t < g; ++t) {
            RankedPart cand{{s, t}};
            if (detail::realizable(cand, table)) found.insert(std::move(cand));
        }
    }
    return finish(found, table.grid(), EnumerationMode::intervals);
}

ExposedPartSet enumerate_interval_parts(const Instance& inst) {
    return enumerate_interval_parts(inst, build_covered_table(inst));
}

ExposedPartSet enumerate_super_parts(const Instance& inst) {
    const Grid grid(inst.intervals);
    std::vector<Span> spans;
    for (const auto& iv : inst.intervals) spans.push_back(grid.span(iv));
    std::sort(spans.begin(), spans.end());
    spans.erase(std::unique(spans.begin(), spans.end()), spans.end());

    const int g = grid.size();
    std::vector<char> taken(static_cast<std::size_t>(g) * static_cast<std::size_t>(g), 0);
    std::set<RankedPart> found;

    for (auto outer : spans) {
        const auto [a, b] = outer;
        std::vector<Span> inner;
        std::vector<int> lefts{a};
        std::vector<int> rights{b};
        for (auto [lo, hi] : spans) {
            if (a <= lo && hi <= b && Span{lo, hi} != outer) inner.push_back({lo, hi});
            if (lo < a && a < hi && hi < b) lefts.push_back(hi);
            if (a < lo && lo < b && b < hi) rights.push_back(lo);
        }
        RankedPart exposed{outer};
        for (auto cut : detail::unite(inner)) exposed = detail::subtract(exposed, cut);
        if (exposed.empty()) continue;

        for (int s : lefts) {
            for (int t : rights) {
                if (s >= t) continue;
                // Hull of exposed clipped to [s, t), found by binary search.
                auto first = std::lower_bound(exposed.begin(), exposed.end(), s,
                                              [](const Span& c, int x) { return c.second <= x; });
                if (first == exposed.end() || first->first >= t) continue;
                auto last = std::lower_bound(exposed.begin(), exposed.end(), t,
                                             [](const Span& c, int x) { return c.first < x; });
                --last;
                const int lo = std::max(first->first, s);
                const int hi = std::min(last->second, t);
                auto& mark = taken[static_cast<std::size_t>(lo) * static_cast<std::size_t>(g) +
                                   static_cast<std::size_t>(hi)];
                if (mark) continue;
                mark = 1;
                found.insert(detail::clip(exposed, Span{s, t}));
            }
        }
    }
    return finish(found, grid, EnumerationMode::super);
}

ExposedPartSet enumerate_pairwise(const Instance& inst, const CoveredIntervalTable& table) {
    if (!classify(inst).is_pairwise_connected) {
        throw PreconditionError("pairwise enumerator needs intervals that pairwise intersect or touch");
    }
    std::set<RankedPart> found;
    for (auto iv : distinct_spans(table)) {
        found.insert(RankedPart{iv});
        for (auto c : table.spans()) {
            RankedPart rest = detail::subtract(RankedPart{iv}, c);
            if (!rest.empty()) found.insert(std::move(rest));
        }
    }
    return finish(found, table.grid(), EnumerationMode::pairwise);
}

ExposedPartSet enumerate_pairwise(const Instance& inst) {
    return enumerate_pairwise(inst, build_covered_table(inst));
}

ExposedPartSet enumerate_alpha(const Instance& inst, const CoveredIntervalTable& table, std::size_t alpha) {
    (void)inst;
    if (alpha < 1) throw InputError("alpha must be at least 1");
    std::vector<Span> covered = table.spans();
    std::sort(covered.begin(), covered.end());

    std::set<RankedPart> found;
    RankedPart gaps;
    // Extends the chain of removed blocks inside (s, t) with blocks starting
    // strictly after `after`, emitting each chain.
    std::function<void(Span, int, std::size_t)> extend = [&](Span hull, int after, std::size_t left) {
        RankedPart part;
        int cursor = hull.first;
        for (auto gap : gaps) {
            part.push_back({cursor, gap.first});
            cursor = gap.second;
        }
        part.push_back({cursor, hull.second});
        found.insert(std::move(part));
        if (left == 0) return;
        auto it = std::upper_bound(covered.begin(), covered.end(), Span{after, hull.second});
        for (; it != covered.end() && it->first < hull.second; ++it) {
            if (it->first <= after || it->second >= hull.second) continue;
            gaps.push_back(*it);
            extend(hull, it->second, left - 1);
            gaps.pop_back();
        }
    };

    for (auto [a, b] : distinct_spans(table)) {
        for (int s = a; s < b; ++s) {
            if (s != a && table.left_reach(s) > a) continue;
            for (int t = s + 1; t <= b; ++t) {
                if (t != b && table.right_reach(t) < b) continue;
                extend(Span{s, t}, s, alpha - 1);
            }
        }
    }
    return finish(found, table.grid(), EnumerationMode::alpha);
}

ExposedPartSet enumerate_alpha(const Instance& inst, std::size_t alpha) {
    return enumerate_alpha(inst, build_covered_table(inst), alpha);
}

ExposedPartSet enumerate_sbound(const Instance& inst, const CoveredIntervalTable& table,
                                std::size_t max_subintervals) {
    (void)inst;
    const std::vector<Span> spans = distinct_spans(table);
    const int g = table.grid().size();
    // Any hull lies inside some interval, so its subintervals are among that
    // interval's; checking the intervals up front refuses before any work.
    for (auto outer : spans) {
        std::size_t subs = 0;
        for (auto inner : spans) {
            if (outer.first <= inner.first && inner.second <= outer.second && inner != outer) ++subs;
        }
        if (subs > max_subintervals) {
            throw CapExceeded("an interval has " + std::to_string(subs) +
                              " distinct proper subintervals, above the cap of " + std::to_string(max_subintervals));
        }
    }
    std::set<RankedPart> found;
    for (int s = 0; s < g; ++s) {
        for (int t = s + 1; t < g; ++t) {
            bool inside_some = false;
            std::vector<Span> subs;
            for (auto [lo, hi] : spans) {
                if (lo <= s && t <= hi) inside_some = true;
                if (s <= lo && hi <= t && Span{lo, hi} != Span{s, t}) subs.push_back({lo, hi});
            }
            if (!inside_some) continue;
            const std::uint64_t combos = std::uint64_t{1} << subs.size();
            for (std::uint64_t mask = 0; mask < combos; ++mask) {
                std::vector<Span> removed;
                for (std::size_t i = 0; i < subs.size(); ++i) {
                    if (mask >> i & 1U) removed.push_back(subs[i]);
                }
                RankedPart part{{s, t}};
                for (auto cut : detail::unite(std::move(removed))) part = detail::subtract(part, cut);
                if (detail::realizable(part, table)) found.insert(std::move(part));
            }
        }
    }
    return finish(found, table.grid(), EnumerationMode::sbound);
}

ExposedPartSet enumerate_sbound(const Instance& inst) {
    return enumerate_sbound(inst, build_covered_table(inst));
}

bool is_exposed_part(const CoveredIntervalTable& table, const DisjointUnion& part) {
    auto ranked = detail::to_ranked(part, table.grid());
    return ranked && detail::realizable(*ranked, table);
}

}  // namespace ivo
