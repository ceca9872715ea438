#include "ivo/geometry.hpp"

#include <algorithm>
#include <ostream>

#include "ivo/errors.hpp"

namespace ivo {

Interval::Interval(Rat start, Rat end) : start_(std::move(start)), end_(std::move(end)) {
    if (!(start_ < end_)) {
        throw InputError("empty interval [" + start_.to_string() + "," + end_.to_string() + ")");
    }
}

std::string Interval::to_string() const {
    return "[" + start_.to_string() + "," + end_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    return os << iv.to_string();
}

DisjointUnion DisjointUnion::of(std::vector<Interval> intervals) {
    std::sort(intervals.begin(), intervals.end());
    DisjointUnion out;
    for (auto& iv : intervals) {
        if (!out.components_.empty() && iv.start() <= out.components_.back().end()) {
            auto& last = out.components_.back();
            if (last.end() < iv.end()) last = Interval(last.start(), iv.end());
        } else {
            out.components_.push_back(std::move(iv));
        }
    }
    return out;
}

bool DisjointUnion::contains(const Rat& point) const {
    auto it = std::upper_bound(components_.begin(), components_.end(), point,
                               [](const Rat& p, const Interval& iv) { return p < iv.start(); });
    if (it == components_.begin()) return false;
    return std::prev(it)->contains(point);
}

Interval DisjointUnion::hull() const {
    if (components_.empty()) throw std::logic_error("hull of an empty union");
    return Interval(components_.front().start(), components_.back().end());
}

std::string DisjointUnion::to_string() const {
    if (components_.empty()) return "{}";
    std::string s;
    for (const auto& c : components_) {
        if (!s.empty()) s += " u ";
        s += c.to_string();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const DisjointUnion& u) {
    return os << u.to_string();
}

DisjointUnion unite(const DisjointUnion& u, const DisjointUnion& v) {
    if (u.empty()) return v;
    if (v.empty()) return u;
    std::vector<Interval> all;
    all.reserve(u.size() + v.size());
    std::merge(u.components().begin(), u.components().end(), v.components().begin(),
               v.components().end(), std::back_inserter(all));
    return DisjointUnion::of(std::move(all));
}

DisjointUnion subtract(const DisjointUnion& u, const DisjointUnion& v) {
    if (u.empty() || v.empty()) return u;
    std::vector<Interval> out;
    const auto& cut = v.components();
    std::size_t j = 0;
    for (const auto& piece : u.components()) {
        Rat cursor = piece.start();
        while (j < cut.size() && cut[j].end() <= cursor) ++j;
        std::size_t k = j;
        while (k < cut.size() && cut[k].start() < piece.end()) {
            if (cursor < cut[k].start()) out.emplace_back(cursor, cut[k].start());
            cursor = max(cursor, cut[k].end());
            ++k;
        }
        if (cursor < piece.end()) out.emplace_back(cursor, piece.end());
    }
    return DisjointUnion::of(std::move(out));
}

DisjointUnion intersect(const DisjointUnion& u, const DisjointUnion& v) {
    return subtract(u, subtract(u, v));
}

Rat length(const DisjointUnion& u) {
    Rat total;
    for (const auto& c : u.components()) total += c.length();
    return total;
}

bool is_single_interval(const DisjointUnion& u) {
    return u.size() == 1;
}

bool is_canonical(const std::vector<Interval>& components) {
    for (std::size_t i = 1; i < components.size(); ++i) {
        if (!(components[i - 1].end() < components[i].start())) return false;
    }
    return true;
}

}  // namespace ivo
