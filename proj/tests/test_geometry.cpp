#include "doctest.h"

#include <random>

#include "ivo/errors.hpp"
#include "ivo/geometry.hpp"

using ivo::DisjointUnion;
using ivo::Interval;
using ivo::Rat;

namespace {

Interval iv(long long a, long long b) { return Interval(Rat(a), Rat(b)); }

DisjointUnion random_union(std::mt19937_64& rng) {
    std::vector<Interval> pieces;
    const int k = static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) {
        long long a = static_cast<long long>(rng() % 12);
        long long b = a + 1 + static_cast<long long>(rng() % 4);
        pieces.push_back(iv(a, b));
    }
    return DisjointUnion::of(pieces);
}

/// Membership at every integer and half-integer point of [-1, 17].
std::vector<bool> samples(const DisjointUnion& u) {
    std::vector<bool> out;
    for (int twice = -2; twice <= 34; ++twice) out.push_back(u.contains(Rat(twice, 2)));
    return out;
}

}  // namespace

TEST_CASE("intervals are half-open and non-empty") {
    CHECK_THROWS_AS(iv(2, 2), ivo::InputError);
    CHECK_THROWS_AS(iv(3, 1), ivo::InputError);
    const Interval a = iv(0, 2);
    CHECK(a.contains(Rat(0)));
    CHECK_FALSE(a.contains(Rat(2)));
    CHECK(a.meets(iv(2, 3)));
    CHECK_FALSE(a.intersects(iv(2, 3)));
    CHECK(a.length() == Rat(2));
}

TEST_CASE("canonical form merges touching and overlapping pieces") {
    const DisjointUnion u = DisjointUnion::of({iv(3, 4), iv(0, 1), iv(1, 2), iv(5, 7), iv(6, 8)});
    REQUIRE(u.size() == 3);
    CHECK(u.to_string() == "[0,2) u [3,4) u [5,8)");
    CHECK(ivo::is_canonical(u.components()));
    CHECK(u.hull() == iv(0, 8));
    CHECK(ivo::length(u) == Rat(6));
}

TEST_CASE("subtracting a middle piece splits an interval") {
    const DisjointUnion u = ivo::subtract(DisjointUnion(iv(0, 3)), DisjointUnion(iv(1, 2)));
    CHECK(u.to_string() == "[0,1) u [2,3)");
    CHECK(ivo::subtract(DisjointUnion(iv(1, 2)), DisjointUnion(iv(0, 3))).empty());
    CHECK(ivo::is_single_interval(DisjointUnion(iv(0, 1))));
    CHECK_FALSE(ivo::is_single_interval(u));
}

TEST_CASE("set operations agree with point membership") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 400; ++k) {
        const DisjointUnion u = random_union(rng);
        const DisjointUnion v = random_union(rng);
        const auto su = samples(u);
        const auto sv = samples(v);
        const auto uni = samples(ivo::unite(u, v));
        const auto sub = samples(ivo::subtract(u, v));
        const auto cap = samples(ivo::intersect(u, v));
        for (std::size_t i = 0; i < su.size(); ++i) {
            CHECK(uni[i] == (su[i] || sv[i]));
            CHECK(sub[i] == (su[i] && !sv[i]));
            CHECK(cap[i] == (su[i] && sv[i]));
        }
        CHECK(ivo::length(ivo::unite(u, v)) + ivo::length(ivo::intersect(u, v)) ==
              ivo::length(u) + ivo::length(v));
        CHECK(ivo::is_canonical(ivo::unite(u, v).components()));
        CHECK(ivo::is_canonical(ivo::subtract(u, v).components()));
    }
}
