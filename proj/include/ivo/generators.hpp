#pragma once

// Instance families: the exponential-length construction, the PARTITION
// reduction, and seeded random instances for testing.

#include <cstdint>
#include <vector>

#include "ivo/instance.hpp"

namespace ivo {

/// [2^i, 2^{i+1}) for i = 1..n-1, then [0, 2^n). Throws InputError for n < 2.
/// Endpoints are arbitrary-precision integers.
Instance gen_lemma14(std::size_t n, CostFunction cost = CostFunction::pow2());

struct PartitionReductionParams {
    std::vector<long long> items;  // positive
    Rat eps{1};
    Rat x0{4};
    Rat c1{1};
    Rat c2{2};
    Rat c3{3};
};

/// Items become consecutive intervals partitioning [0, 2 eps), followed by
/// [0, x0 + eps). The cost is continuous piecewise linear through the origin
/// with slope c2 up to x0 - eps, c1 up to x0 and c3 beyond; W = f(eps) + f(x0).
/// Throws InputError unless items are positive and non-empty, eps > 0,
/// x0 - eps >= 2 eps and c1 < c2 < c3.
Instance gen_partition_reduction(const PartitionReductionParams& p);

/// The cost function used by gen_partition_reduction.
CostFunction partition_cost(const PartitionReductionParams& p);

/// True iff some sub-multiset of `items` sums to half the total.
bool has_partition(const std::vector<long long>& items);

enum class RandomFamily { general, agreeable, laminar, pairwise };

std::string to_string(RandomFamily family);
/// Throws InputError on unknown names.
RandomFamily random_family_from_string(const std::string& name);

/// n intervals with integer endpoints in [0, coord_range], deterministic in
/// `seed`. agreeable: starts and ends sorted together; laminar: every pair
/// nested or disjoint; pairwise: all intervals contain coord_range / 2.
/// Throws InputError for n < 1 or coord_range < 1.
Instance gen_random(std::size_t n, long long coord_range, std::uint64_t seed,
                    RandomFamily family = RandomFamily::general,
                    CostFunction cost = CostFunction::pow2());

}  // namespace ivo
