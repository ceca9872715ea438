#pragma once

// Exact solvers: the covered-interval dynamic program over a chosen
// exposed-part set, plus two exhaustive oracles (subset DP and permutation
// brute force) and the class-based dispatcher.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ivo/covered.hpp"
#include "ivo/exposed.hpp"
#include "ivo/instance.hpp"

namespace ivo {

enum class AlgorithmKind { automatic, full, sub, super, pairwise, alpha, sbound, subset_dp, brute };

struct Algorithm {
    AlgorithmKind kind = AlgorithmKind::automatic;
    std::size_t alpha = 1;  // AlgorithmKind::alpha only
};

std::string to_string(AlgorithmKind kind);
/// "auto", "full", "sub", ...; throws InputError on unknown names.
AlgorithmKind algorithm_from_string(const std::string& name);

struct Solution {
    Cost total;
    Ordering ordering;
    /// exposed[p] belongs to the interval at ordering position p.
    std::vector<DisjointUnion> exposed;
    AlgorithmKind algorithm = AlgorithmKind::automatic;
};

/// OPT over the covered-interval table, filled in topological order.
struct DpTable {
    std::vector<std::optional<Cost>> opt;         // by covered-interval id
    std::vector<std::optional<std::size_t>> choice;  // index into the part set
};

struct DpResult {
    Solution solution;
    DpTable table;
    /// Value of OPT(C(I)) as computed by the recurrence; equals
    /// solution.total exactly in the exact backend.
    Cost dp_value;
};

/// The dynamic program over covered intervals. For each covered interval C
/// it minimizes f(|E|) + k f(0) + sum OPT(C'_l) over parts E inside C such
/// that every component C'_l of C \ E is a covered interval and some interval
/// of I_C contains E; k counts the intervals of I_C left fully covered.
/// Requires C(I) to be a single interval (or I empty). Throws
/// InfeasibleEnumeration if `parts` admits no decomposition of C(I).
DpResult dp_solve_detailed(const Instance& inst, const ExposedPartSet& parts,
                           AlgorithmKind tag = AlgorithmKind::full);
Solution dp_solve(const Instance& inst, const ExposedPartSet& parts,
                  AlgorithmKind tag = AlgorithmKind::full);

/// The 2^n subset recurrence; refuses (CapExceeded) beyond `cap` intervals.
Solution subset_dp(const Instance& inst, std::size_t cap = 20);

/// Minimum over all n! orderings, lexicographically smallest on ties;
/// refuses beyond `cap` intervals.
Solution brute_force(const Instance& inst, std::size_t cap = 8);

/// Splits into interval components and solves each with `algo`, summing
/// costs and concatenating orderings. subset_dp and brute run on the whole
/// instance.
Solution solve(const Instance& inst, Algorithm algo);

/// Dispatch per component: declared sub -> interval parts, declared super
/// -> super parts, pairwise-meeting -> pairwise parts, otherwise all parts.
Solution solve_auto(const Instance& inst);

/// Exposed parts used by `algo` on one component.
ExposedPartSet parts_for(const Instance& component, const CoveredIntervalTable& table, Algorithm algo);

/// solve_auto(inst).total <= W. Throws InputError when W is absent.
bool decide(const Instance& inst);

}  // namespace ivo
