#pragma once

// Enumerators of exposed parts. Each returns a deduplicated set of
// non-empty parts in lexicographic order of their component lists; they
// differ in which subset of all realizable exposed parts they produce and
// how fast.

#include <cstddef>
#include <string>
#include <vector>

#include "ivo/covered.hpp"
#include "ivo/instance.hpp"

namespace ivo {

enum class EnumerationMode { full, oracle, intervals, super, pairwise, alpha, sbound };

std::string to_string(EnumerationMode mode);

struct ExposedPartSet {
    std::vector<DisjointUnion> parts;
    EnumerationMode mode = EnumerationMode::full;
    /// enumerate_full only: set size after each interval, in the
    /// descending-length insertion order.
    std::vector<std::size_t> prefix_sizes;

    std::size_t size() const { return parts.size(); }
    bool contains(const DisjointUnion& u) const;
};

/// Every realizable exposed part. Inserts intervals by decreasing length;
/// each new interval adds E minus itself for every known E, plus its own
/// exposed pieces bounded by its endpoints or the endpoints of the longer
/// intervals overlapping it. O(n^2 2^n).
ExposedPartSet enumerate_full(const Instance& inst);

/// Every exposed part of every ordering; refuses (CapExceeded) beyond `cap`.
ExposedPartSet enumerate_oracle(const Instance& inst, std::size_t cap = 8);

/// Realizable parts that are single intervals; O(n^3).
ExposedPartSet enumerate_interval_parts(const Instance& inst, const CoveredIntervalTable& table);
ExposedPartSet enumerate_interval_parts(const Instance& inst);

/// Parts realizable by orderings in which no interval precedes one of its
/// proper subintervals. At most one part per (first start, last end).
ExposedPartSet enumerate_super_parts(const Instance& inst);

/// For instances whose intervals pairwise meet: I minus C for every interval
/// I and covered interval C. Throws PreconditionError otherwise.
ExposedPartSet enumerate_pairwise(const Instance& inst, const CoveredIntervalTable& table);
ExposedPartSet enumerate_pairwise(const Instance& inst);

/// Realizable parts with at most `alpha` components.
ExposedPartSet enumerate_alpha(const Instance& inst, const CoveredIntervalTable& table, std::size_t alpha);
ExposedPartSet enumerate_alpha(const Instance& inst, std::size_t alpha);

/// Every realizable part, found by removing subsets of the proper
/// subintervals of each candidate hull; O(n^3 2^{s_I}). Throws CapExceeded
/// if some interval has more than `max_subintervals` distinct proper subintervals.
ExposedPartSet enumerate_sbound(const Instance& inst, const CoveredIntervalTable& table,
                                std::size_t max_subintervals = 24);
ExposedPartSet enumerate_sbound(const Instance& inst);

/// Whether `part` is the exposed part of some interval in some ordering.
bool is_exposed_part(const CoveredIntervalTable& table, const DisjointUnion& part);

}  // namespace ivo
