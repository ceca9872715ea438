#include "ivo/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace ivo {

Grid::Grid(const std::vector<Interval>& intervals) {
    coords_.reserve(2 * intervals.size());
    for (const auto& iv : intervals) {
        coords_.push_back(iv.start());
        coords_.push_back(iv.end());
    }
    std::sort(coords_.begin(), coords_.end());
    coords_.erase(std::unique(coords_.begin(), coords_.end()), coords_.end());
}

std::optional<int> Grid::find(const Rat& x) const {
    auto it = std::lower_bound(coords_.begin(), coords_.end(), x);
    if (it == coords_.end() || *it != x) return std::nullopt;
    return static_cast<int>(it - coords_.begin());
}

int Grid::rank(const Rat& x) const {
    if (auto r = find(x)) return *r;
    throw std::out_of_range("coordinate " + x.to_string() + " is not an instance endpoint");
}

}  // namespace ivo
