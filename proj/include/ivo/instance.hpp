#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ivo/cost.hpp"
#include "ivo/geometry.hpp"

namespace ivo {

/// A problem instance: intervals (0-based internally, 1-based in user
/// output), a cost function and an optional decision threshold W.
/// Duplicate intervals are allowed.
struct Instance {
    std::vector<Interval> intervals;
    CostFunction cost;
    std::optional<Rat> threshold;

    std::size_t size() const { return intervals.size(); }
    bool empty() const { return intervals.empty(); }

    /// Exact unless f can be irrational at some exposed length: sqrt always,
    /// pow2 whenever an endpoint is not an integer.
    CostBackend backend() const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Permutation of interval indices; position 0 comes first.
using Ordering = std::vector<std::size_t>;

bool is_valid_ordering(const Instance& inst, const Ordering& ord);

/// C(I'), the covered area of the given intervals.
DisjointUnion covered_area(const std::vector<Interval>& intervals);

struct OrderingCost {
    Cost total;
    /// exposed[p] is the exposed part of the interval at position p.
    std::vector<DisjointUnion> exposed;
};

/// Sweeps `ord`, accumulating the covered area. Throws InputError for an
/// invalid permutation.
OrderingCost cost_of_ordering(const Instance& inst, const Ordering& ord);

struct InstanceStats {
    bool is_agreeable = false;
    bool is_laminar = false;
    bool is_pairwise_connected = false;
    std::size_t max_subintervals = 0;  // s_I
    std::size_t component_count = 0;
};

InstanceStats classify(const Instance& inst);

/// One interval component of C(I) together with the intervals inside it.
struct ComponentInstance {
    Instance instance;
    /// indices[i] is the original index of instance.intervals[i].
    std::vector<std::size_t> indices;
};

/// Partitions by interval component of C(I), left to right; original
/// relative order is kept inside each component.
std::vector<ComponentInstance> split_components(const Instance& inst);

struct ClassViolation {
    Rat x;
    Rat y;
};

/// Samples `samples` random pairs of non-negative rationals and returns those
/// violating the declared inequality on f - f(0). Requires a declared class.
std::vector<ClassViolation> spot_check_class(const CostFunction& f, std::size_t samples,
                                             std::uint64_t seed);

}  // namespace ivo
