#include "doctest.h"

#include <random>

#include "ivo/errors.hpp"
#include "ivo/exposed.hpp"
#include "ivo/instance_json.hpp"
#include "oracles.hpp"

using ivo::CostFunction;
using ivo::DisjointUnion;
using ivo::Instance;
using ivo::Rat;

namespace {

Instance make(std::vector<std::pair<long long, long long>> spans) {
    Instance inst;
    for (auto [a, b] : spans) inst.intervals.emplace_back(Rat(a), Rat(b));
    return inst;
}

std::set<oracle::Mask> single_intervals(const std::set<oracle::Mask>& parts) {
    std::set<oracle::Mask> out;
    for (auto m : parts) {
        if (oracle::contiguous(m)) out.insert(m);
    }
    return out;
}

}  // namespace

TEST_CASE("overlapping pair has four exposed parts") {
    const Instance inst = make({{0, 2}, {1, 3}});
    CHECK(ivo::enumerate_full(inst).size() == 4);
    CHECK(ivo::enumerate_interval_parts(inst).size() == 4);
    CHECK(ivo::enumerate_oracle(inst).parts == ivo::enumerate_full(inst).parts);
}

TEST_CASE("nested pair exposes the outer interval with a hole") {
    const auto parts = ivo::enumerate_full(make({{0, 3}, {1, 2}}));
    std::vector<std::string> text;
    for (const auto& p : parts.parts) text.push_back(p.to_string());
    CHECK(text == std::vector<std::string>{"[0,1) u [2,3)", "[0,3)", "[1,2)"});
}

TEST_CASE("empty instance has no parts") {
    CHECK(ivo::enumerate_full(make({})).size() == 0);
    CHECK(ivo::enumerate_super_parts(make({})).size() == 0);
    CHECK(ivo::enumerate_interval_parts(make({})).size() == 0);
}

TEST_CASE("enumerators respect their preconditions and caps") {
    CHECK_THROWS_AS(ivo::enumerate_pairwise(make({{0, 1}, {2, 3}})), ivo::PreconditionError);
    CHECK_THROWS_AS(ivo::enumerate_alpha(make({{0, 1}}), 0), ivo::InputError);
    std::vector<std::pair<long long, long long>> many;
    for (int i = 0; i < 9; ++i) many.push_back({i, i + 1});
    CHECK_THROWS_AS(ivo::enumerate_oracle(make(many)), ivo::CapExceeded);
    many.clear();
    many.push_back({0, 100});
    for (int i = 0; i < 25; ++i) many.push_back({2 * i, 2 * i + 1});
    CHECK_THROWS_AS(ivo::enumerate_sbound(make(many)), ivo::CapExceeded);
}

TEST_CASE("exact enumerators agree with the permutation oracle") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 250; ++k) {
        const std::size_t n = 1 + rng() % 6;
        const Instance inst = oracle::random_instance(rng, n, 16, CostFunction::pow2());
        const auto truth = oracle::exposed_parts(inst);
        CAPTURE(ivo::serialize_instance(inst));
        CHECK(oracle::masks_of(ivo::enumerate_full(inst).parts) == truth);
        CHECK(oracle::masks_of(ivo::enumerate_oracle(inst).parts) == truth);
        CHECK(oracle::masks_of(ivo::enumerate_sbound(inst).parts) == truth);
        CHECK(oracle::masks_of(ivo::enumerate_alpha(inst, n).parts) == truth);
        CHECK(oracle::masks_of(ivo::enumerate_interval_parts(inst).parts) == single_intervals(truth));
        CHECK(ivo::enumerate_alpha(inst, 1).parts == ivo::enumerate_interval_parts(inst).parts);
    }
}

TEST_CASE("alpha sets grow with alpha and count components") {
    std::mt19937_64 rng(37);
    for (int k = 0; k < 100; ++k) {
        const Instance inst = oracle::random_instance(rng, 1 + rng() % 6, 16, CostFunction::pow2());
        const auto truth = oracle::exposed_parts(inst);
        for (std::size_t alpha = 1; alpha <= 3; ++alpha) {
            std::set<oracle::Mask> expected;
            for (const auto& p : ivo::enumerate_full(inst).parts) {
                if (p.size() <= alpha) expected.insert(oracle::mask_of(p));
            }
            CHECK(oracle::masks_of(ivo::enumerate_alpha(inst, alpha).parts) == expected);
        }
    }
}

TEST_CASE("super parts cover every subinterval-first exposed part") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 250; ++k) {
        const Instance inst = oracle::random_instance(rng, 1 + rng() % 6, 16, CostFunction::pow2());
        const auto got = oracle::masks_of(ivo::enumerate_super_parts(inst).parts);
        const auto all = oracle::exposed_parts(inst);
        for (auto m : oracle::subinterval_first_parts(inst)) CHECK(got.count(m) == 1);
        for (auto m : got) CHECK(all.count(m) == 1);
    }
}

TEST_CASE("pairwise parts cover every exposed part of pairwise-meeting instances") {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = 1 + rng() % 6;
        const Instance inst = oracle::random_pairwise_instance(rng, n, 16, CostFunction::pow2());
        const auto got = oracle::masks_of(ivo::enumerate_pairwise(inst).parts);
        for (auto m : oracle::exposed_parts(inst)) CHECK(got.count(m) == 1);
        CHECK(got.size() <= 4 * n * n * n);
    }
}

TEST_CASE("membership test matches the oracle on every grid-aligned union") {
    std::mt19937_64 rng(47);
    for (int k = 0; k < 60; ++k) {
        const Instance inst = oracle::random_instance(rng, 1 + rng() % 5, 10, CostFunction::pow2());
        const auto truth = oracle::exposed_parts(inst);
        const auto table = ivo::build_covered_table(inst);
        const auto& coords = table.grid().coords();
        const std::size_t g = coords.size();
        // Every union of elementary grid segments.
        for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << (g - 1)); ++pick) {
            std::vector<ivo::Interval> pieces;
            for (std::size_t r = 0; r + 1 < g; ++r) {
                if (pick >> r & 1U) pieces.emplace_back(coords[r], coords[r + 1]);
            }
            const DisjointUnion u = DisjointUnion::of(pieces);
            CHECK(ivo::is_exposed_part(table, u) == (truth.count(oracle::mask_of(u)) == 1));
        }
    }
}

TEST_CASE("enumerators are deterministic and sorted") {
    std::mt19937_64 rng(53);
    const Instance inst = oracle::random_instance(rng, 7, 16, CostFunction::pow2());
    const auto a = ivo::enumerate_full(inst);
    const auto b = ivo::enumerate_full(inst);
    CHECK(a.parts == b.parts);
    CHECK(std::is_sorted(a.parts.begin(), a.parts.end()));
    CHECK(std::adjacent_find(a.parts.begin(), a.parts.end()) == a.parts.end());
    CHECK(a.prefix_sizes.size() == inst.size());
}
