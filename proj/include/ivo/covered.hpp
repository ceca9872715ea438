#pragma once

// The covered intervals of an instance: every interval [a, b) that equals
// the union of the input intervals it contains. These are the states of the
// exposed-part dynamic program.

#include <cstdint>
#include <optional>
#include <vector>

#include "ivo/grid.hpp"
#include "ivo/instance.hpp"

namespace ivo {

struct CoveredEntry {
    Interval interval;
    std::size_t contained_count;  // |I_C|
    std::size_t id;               // position in topological order
};

class CoveredIntervalTable {
public:
    CoveredIntervalTable() = default;

    /// Entries ordered by decreasing start, then increasing end: every proper
    /// subinterval precedes its supersets.
    const std::vector<CoveredEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// Id of `u` if it is a single interval in the table.
    std::optional<std::size_t> lookup(const DisjointUnion& u) const;
    std::optional<std::size_t> lookup(const Interval& iv) const;

    const Grid& grid() const { return grid_; }
    /// Rank spans of the entries, indexed by id.
    const std::vector<Span>& spans() const { return spans_; }
    /// Rank spans of the instance intervals, indexed like the instance.
    const std::vector<Span>& interval_spans() const { return interval_spans_; }

    std::optional<std::size_t> lookup(Span s) const {
        if (s.first < 0 || s.second >= grid_.size() || s.first >= s.second) return std::nullopt;
        auto v = id_by_span_[static_cast<std::size_t>(s.first) * static_cast<std::size_t>(grid_.size()) +
                             static_cast<std::size_t>(s.second)];
        if (v < 0) return std::nullopt;
        return static_cast<std::size_t>(v);
    }

    /// Start rank of the longest covered interval ending at rank x, or x when
    /// no covered interval ends there.
    int left_reach(int x) const { return left_reach_[static_cast<std::size_t>(x)]; }
    /// End rank of the longest covered interval starting at rank x, or x.
    int right_reach(int x) const { return right_reach_[static_cast<std::size_t>(x)]; }

private:
    friend CoveredIntervalTable build_covered_table(const Instance& inst);

    Grid grid_;
    std::vector<CoveredEntry> entries_;
    std::vector<Span> spans_;
    std::vector<Span> interval_spans_;
    std::vector<std::int32_t> id_by_span_;
    std::vector<int> left_reach_;
    std::vector<int> right_reach_;
};

/// Sweep over every (start point, end point) pair, ignoring intervals that
/// stick out of the candidate; O(n^3).
CoveredIntervalTable build_covered_table(const Instance& inst);

}  // namespace ivo
