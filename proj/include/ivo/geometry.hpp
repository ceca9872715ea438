#pragma once

// Half-open rational intervals and canonical unions of them.

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "ivo/rational.hpp"

namespace ivo {

/// Non-empty half-open interval [start, end).
class Interval {
public:
    /// Throws InputError unless start < end.
    Interval(Rat start, Rat end);

    const Rat& start() const { return start_; }
    const Rat& end() const { return end_; }
    Rat length() const { return end_ - start_; }

    bool contains(const Rat& point) const { return start_ <= point && point < end_; }
    bool contains(const Interval& other) const {
        return start_ <= other.start_ && other.end_ <= end_;
    }
    bool intersects(const Interval& other) const {
        return start_ < other.end_ && other.start_ < end_;
    }
    /// Intersecting or touching: the union is a single interval.
    bool meets(const Interval& other) const {
        return start_ <= other.end_ && other.start_ <= end_;
    }

    std::string to_string() const;

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;

private:
    Rat start_;
    Rat end_;
};

std::ostream& operator<<(std::ostream& os, const Interval& iv);

/// A finite union of intervals kept in canonical form: components sorted by
/// start and separated by a strictly positive gap (touching pieces merge).
/// The empty union is a valid value.
class DisjointUnion {
public:
    DisjointUnion() = default;
    explicit DisjointUnion(Interval iv) { components_.push_back(std::move(iv)); }

    /// Canonicalizes an arbitrary list of intervals (any order, overlaps allowed).
    static DisjointUnion of(std::vector<Interval> intervals);

    const std::vector<Interval>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }
    bool empty() const { return components_.empty(); }

    bool contains(const Rat& point) const;
    /// Smallest interval containing the union; requires !empty().
    Interval hull() const;

    std::string to_string() const;

    /// Lexicographic by component list, shorter prefix first.
    friend bool operator==(const DisjointUnion&, const DisjointUnion&) = default;
    friend auto operator<=>(const DisjointUnion&, const DisjointUnion&) = default;

private:
    std::vector<Interval> components_;
};

std::ostream& operator<<(std::ostream& os, const DisjointUnion& u);

DisjointUnion unite(const DisjointUnion& u, const DisjointUnion& v);
DisjointUnion subtract(const DisjointUnion& u, const DisjointUnion& v);
DisjointUnion intersect(const DisjointUnion& u, const DisjointUnion& v);
Rat length(const DisjointUnion& u);
bool is_single_interval(const DisjointUnion& u);

/// True iff the components are sorted and pairwise separated by a gap.
bool is_canonical(const std::vector<Interval>& components);

}  // namespace ivo
