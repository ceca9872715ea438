#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ivo/geometry.hpp"

namespace ivo {

/// Half-open span [first, second) over grid ranks.
using Span = std::pair<int, int>;

/// The sorted distinct endpoints of a set of intervals. Every exposed part
/// and covered interval of an instance has its endpoints on this grid, so
/// the combinatorial algorithms work on integer ranks and only lengths go
/// back to rationals.
class Grid {
public:
    Grid() = default;
    explicit Grid(const std::vector<Interval>& intervals);

    int size() const { return static_cast<int>(coords_.size()); }
    const Rat& at(int rank) const { return coords_.at(static_cast<std::size_t>(rank)); }
    const std::vector<Rat>& coords() const { return coords_; }

    std::optional<int> find(const Rat& x) const;
    /// Throws std::out_of_range when x is not a grid point.
    int rank(const Rat& x) const;

    Span span(const Interval& iv) const { return {rank(iv.start()), rank(iv.end())}; }
    Interval interval(Span s) const { return Interval(at(s.first), at(s.second)); }
    Rat length(Span s) const { return at(s.second) - at(s.first); }

private:
    std::vector<Rat> coords_;
};

}  // namespace ivo
