#include "doctest.h"

#include <cmath>

#include "ivo/cost.hpp"
#include "ivo/errors.hpp"
#include "ivo/instance.hpp"

using ivo::Cost;
using ivo::CostBackend;
using ivo::CostFunction;
using ivo::FunctionClass;
using ivo::Rat;

TEST_CASE("powers of two are exact at integers") {
    const CostFunction f = CostFunction::pow2();
    CHECK(ivo::eval_cost(f, Rat(0)).exact() == Rat(1));
    CHECK(ivo::eval_cost(f, Rat(10)).exact() == Rat(1024));
    CHECK(ivo::eval_cost(f, Rat(200)).exact().to_string().size() > 50);
    CHECK(f.natural_backend(Rat(3)) == CostBackend::exact);
    CHECK(f.natural_backend(Rat(1, 2)) == CostBackend::extended);
}

TEST_CASE("irrational values need the extended backend") {
    const Cost half = ivo::eval_cost(CostFunction::pow2(), Rat(1, 2));
    CHECK(half.backend() == CostBackend::extended);
    CHECK(std::abs(half.to_double() - std::sqrt(2.0)) < 1e-15);
    CHECK_THROWS_AS(ivo::eval_cost(CostFunction::sqrt(), Rat(2), CostBackend::exact), std::logic_error);
    const Cost r = ivo::eval_cost(CostFunction::sqrt(Rat(3)), Rat(4));
    CHECK(ivo::costs_agree(r, Cost(Rat(6))));
}

TEST_CASE("piecewise linear accumulates slope times piece length") {
    const CostFunction f = CostFunction::piecewise_linear(Rat(0), {2, 1, 3}, {3, 4});
    CHECK(ivo::eval_cost(f, Rat(0)).exact() == Rat(0));
    CHECK(ivo::eval_cost(f, Rat(1)).exact() == Rat(2));
    CHECK(ivo::eval_cost(f, Rat(3)).exact() == Rat(6));
    CHECK(ivo::eval_cost(f, Rat(4)).exact() == Rat(7));
    CHECK(ivo::eval_cost(f, Rat(5)).exact() == Rat(10));
    CHECK(ivo::eval_cost(f, Rat(7, 2)).exact() == Rat(13, 2));
    CHECK_THROWS_AS(CostFunction::piecewise_linear(Rat(0), {1, 2}, {3, 4}), ivo::InputError);
    CHECK_THROWS_AS(CostFunction::piecewise_linear(Rat(0), {1, 2, 3}, {4, 3}), ivo::InputError);
}

TEST_CASE("linear, polynomial and table costs") {
    CHECK(ivo::eval_cost(CostFunction::linear(3, -1), Rat(2)).exact() == Rat(5));
    CHECK(ivo::eval_cost(CostFunction::polynomial({1, 0, 1}), Rat(3)).exact() == Rat(10));
    const CostFunction t = CostFunction::table({{Rat(0), Rat(0)}, {Rat(2), Rat(-5)}});
    CHECK(ivo::eval_cost(t, Rat(2)).exact() == Rat(-5));
    CHECK_THROWS_AS(ivo::eval_cost(t, Rat(1)), ivo::UndefinedLength);
    CHECK_THROWS_AS(ivo::eval_cost(t, Rat(-1)), ivo::InputError);
}

TEST_CASE("costs from different backends do not mix") {
    Cost a(Rat(1));
    const Cost b = Cost::zero(CostBackend::extended);
    CHECK_THROWS_AS(a += b, std::logic_error);
    CHECK(a.in(CostBackend::extended).backend() == CostBackend::extended);
    CHECK(Cost(Rat(2)).scaled(3) == Cost(Rat(6)));
    CHECK(Cost(Rat(1)) < Cost(Rat(2)));
}

TEST_CASE("extended backend keeps more than double precision") {
    // 2^{1/2} squared differs from 2 by far less than a double ulp would allow.
    const Cost r = ivo::eval_cost(CostFunction::pow2(), Rat(1, 2));
    const ivo::Extended sq = r.approx() * r.approx();
    CHECK(abs(sq - ivo::Extended(2)) < ivo::Extended("1e-35"));
}

TEST_CASE("class spot checks find violations only for wrong declarations") {
    CHECK(ivo::spot_check_class(CostFunction::pow2(FunctionClass::super_shifted), 500, 1).empty());
    CHECK(ivo::spot_check_class(CostFunction::sqrt(1, FunctionClass::sub_shifted), 500, 1).empty());
    CHECK(ivo::spot_check_class(CostFunction::polynomial({0, 0, 1}, FunctionClass::super_shifted), 500, 1).empty());
    CHECK_FALSE(ivo::spot_check_class(CostFunction::pow2(FunctionClass::sub_shifted), 500, 1).empty());
    CHECK_THROWS_AS(ivo::spot_check_class(CostFunction::pow2(), 10, 1), ivo::PreconditionError);
}
