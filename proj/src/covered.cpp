#include "ivo/covered.hpp"

#include <algorithm>

namespace ivo {

std::optional<std::size_t> CoveredIntervalTable::lookup(const DisjointUnion& u) const {
    if (!is_single_interval(u)) return std::nullopt;
    return lookup(u.components().front());
}

std::optional<std::size_t> CoveredIntervalTable::lookup(const Interval& iv) const {
    auto lo = grid_.find(iv.start());
    auto hi = grid_.find(iv.end());
    if (!lo || !hi) return std::nullopt;
    return lookup(Span{*lo, *hi});
}

CoveredIntervalTable build_covered_table(const Instance& inst) {
    CoveredIntervalTable t;
    t.grid_ = Grid(inst.intervals);
    const int g = t.grid_.size();
    for (const auto& iv : inst.intervals) t.interval_spans_.push_back(t.grid_.span(iv));

    std::vector<Span> by_start = t.interval_spans_;
    std::sort(by_start.begin(), by_start.end());

    std::vector<int> starts;
    std::vector<int> ends;
    for (auto [a, b] : by_start) {
        starts.push_back(a);
        ends.push_back(b);
    }
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());

    struct Found {
        Span span;
        std::size_t count;
    };
    std::vector<Found> found;
    for (int a : starts) {
        auto first = std::lower_bound(by_start.begin(), by_start.end(), Span{a, a});
        for (int b : ends) {
            if (b <= a) continue;
            int reach = a;
            std::size_t count = 0;
            bool gap = false;
            for (auto it = first; it != by_start.end() && it->first < b; ++it) {
                if (it->second > b) continue;
                if (it->first > reach) {
                    gap = true;
                    break;
                }
                reach = std::max(reach, it->second);
                ++count;
            }
            if (!gap && reach == b) found.push_back({{a, b}, count});
        }
    }

    std::sort(found.begin(), found.end(), [](const Found& x, const Found& y) {
        if (x.span.first != y.span.first) return x.span.first > y.span.first;
        return x.span.second < y.span.second;
    });

    t.id_by_span_.assign(static_cast<std::size_t>(g) * static_cast<std::size_t>(g), -1);
    t.left_reach_.resize(static_cast<std::size_t>(g));
    t.right_reach_.resize(static_cast<std::size_t>(g));
    for (int x = 0; x < g; ++x) {
        t.left_reach_[static_cast<std::size_t>(x)] = x;
        t.right_reach_[static_cast<std::size_t>(x)] = x;
    }
    for (std::size_t id = 0; id < found.size(); ++id) {
        auto [a, b] = found[id].span;
        t.entries_.push_back({t.grid_.interval(found[id].span), found[id].count, id});
        t.spans_.push_back(found[id].span);
        t.id_by_span_[static_cast<std::size_t>(a) * static_cast<std::size_t>(g) + static_cast<std::size_t>(b)] =
            static_cast<std::int32_t>(id);
        auto& lr = t.left_reach_[static_cast<std::size_t>(b)];
        lr = std::min(lr, a);
        auto& rr = t.right_reach_[static_cast<std::size_t>(a)];
        rr = std::max(rr, b);
    }
    return t;
}

}  // namespace ivo
