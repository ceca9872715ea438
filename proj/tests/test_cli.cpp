#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "ivo/generators.hpp"
#include "ivo/instance_json.hpp"
#include "ivo/solver.hpp"
#include "ivo/svg.hpp"
#include "json.hpp"

using ivo::CostFunction;
using ivo::Instance;
using ivo::Rat;

namespace {

namespace fs = std::filesystem;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = ivo::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const fs::path dir = fs::temp_directory_path() / "ivo_cli_tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
}

std::string instance_file(const std::string& name, std::vector<std::pair<long long, long long>> spans,
                          CostFunction f = CostFunction::pow2()) {
    Instance inst;
    inst.cost = std::move(f);
    for (auto [a, b] : spans) inst.intervals.emplace_back(Rat(a), Rat(b));
    return write_temp(name, ivo::serialize_instance(inst));
}

/// (from, to) of every dashed segment in an SVG document.
std::vector<std::pair<std::string, std::string>> dashed(const std::string& svg) {
    std::vector<std::pair<std::string, std::string>> out;
    const std::regex re(R"re(class="exposed" data-from="([^"]+)" data-to="([^"]+)")re");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
        out.emplace_back((*it)[1].str(), (*it)[2].str());
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> exposed_of(const Instance& inst, const ivo::Ordering& ord) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : ivo::cost_of_ordering(inst, ord).exposed) {
        for (const auto& c : e.components()) out.emplace_back(c.start().to_string(), c.end().to_string());
    }
    return out;
}

}  // namespace

TEST_CASE("solve reports the nested-pair optimum") {
    const std::string f = instance_file("nested.json", {{0, 3}, {1, 2}}, CostFunction::pow2(ivo::FunctionClass::super_shifted));
    const Run r = run({"solve", f});
    CHECK(r.code == 0);
    CHECK(r.out.find("ordering: 2 1\n") != std::string::npos);
    CHECK(r.out.find("total: 6\n") != std::string::npos);

    const Run j = run({"solve", f, "--json", "--algorithm", "super"});
    REQUIRE(j.code == 0);
    const auto report = nlohmann::json::parse(j.out);
    CHECK(report["total"] == nlohmann::json::array({6, 1}));
    CHECK(report["ordering"] == nlohmann::json::array({2, 1}));
}

TEST_CASE("solve json total matches the library byte for byte") {
    const Instance inst = ivo::gen_random(7, 16, 5, ivo::RandomFamily::general, CostFunction::polynomial({0, 0, 1}));
    const std::string f = write_temp("random7.json", ivo::serialize_instance(inst));
    const Run j = run({"solve", f, "--json", "--algorithm", "full"});
    REQUIRE(j.code == 0);
    const auto report = nlohmann::json::parse(j.out);
    const auto lib = ivo::solve(inst, {ivo::AlgorithmKind::full, 1});
    CHECK(report["total"].dump() == ivo::rat_to_json(lib.total.exact()).dump());
}

TEST_CASE("solve on an empty instance") {
    const Run r = run({"solve", instance_file("empty.json", {})});
    CHECK(r.code == 0);
    CHECK(r.out.find("total: 0\n") != std::string::npos);
}

TEST_CASE("exit codes") {
    std::vector<std::pair<long long, long long>> nine;
    for (int i = 0; i < 9; ++i) nine.push_back({i, i + 2});
    const std::string f9 = instance_file("nine.json", nine);
    CHECK(run({"solve", f9, "--algorithm", "brute"}).code == 3);
    CHECK(run({"solve", f9, "--algorithm", "subset-dp"}).code == 0);
    CHECK(run({"solve", write_temp("bad.json", "{")}).code == 2);
    CHECK(run({"solve", "/nonexistent/x.json"}).code == 2);
    CHECK(run({"solve", f9, "--algorithm", "quantum"}).code == 2);
    CHECK(run({"solve", f9, "--algorithm", "alpha"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);

    const std::string hole = instance_file("hole.json", {{0, 3}, {1, 2}});
    CHECK(run({"solve", hole, "--algorithm", "sub"}).code == 0);
    CHECK(run({"solve", instance_file("chain.json", {{0, 2}, {1, 3}, {3, 5}}), "--algorithm", "pairwise"}).code == 2);
    CHECK(run({"plot", hole, "--ordering", "1,1"}).code == 2);
    CHECK(run({"plot", hole, "--ordering", "1,2,3"}).code == 2);
    CHECK(run({"plot", hole, "--ordering", "x,1"}).code == 2);
}

TEST_CASE("enumerate listings") {
    const std::string f = instance_file("overlap.json", {{0, 2}, {1, 3}});
    const Run full = run({"enumerate", f, "--mode", "full"});
    CHECK(full.code == 0);
    CHECK(full.out.find("count: 4\n") != std::string::npos);
    CHECK(run({"enumerate", f, "--mode", "intervals"}).out.find("count: 4\n") != std::string::npos);
    CHECK(run({"enumerate", f, "--mode", "alpha", "1"}).out == run({"enumerate", f, "--mode", "intervals"}).out);
    CHECK(run({"enumerate", f, "--mode", "oracle"}).out == full.out);
    CHECK(run({"enumerate", f, "--mode", "bogus"}).code == 2);
}

TEST_CASE("classify summary") {
    const Run r = run({"classify", instance_file("nest3.json", {{0, 4}, {1, 2}, {2, 3}})});
    CHECK(r.code == 0);
    CHECK(r.out.find("laminar: yes") != std::string::npos);
    CHECK(r.out.find("max proper subintervals: 2") != std::string::npos);
}

TEST_CASE("generate matches the generators and round-trips") {
    const Run l = run({"generate", "lemma14", "--n", "2"});
    REQUIRE(l.code == 0);
    const Instance lemma = ivo::parse_instance(l.out);
    CHECK(lemma.intervals == ivo::gen_lemma14(2).intervals);
    CHECK(ivo::serialize_instance(lemma) == l.out);

    const Run p = run({"generate", "partition", "--items", "1", "1", "2", "--eps", "1", "--x0", "4", "--slopes", "1",
                       "2", "3"});
    REQUIRE(p.code == 0);
    CHECK(nlohmann::json::parse(p.out)["W"] == nlohmann::json::array({9, 1}));
    CHECK(ivo::serialize_instance(ivo::parse_instance(p.out)) == p.out);

    const Run a = run({"generate", "random", "--n", "5", "--seed", "7"});
    const Run b = run({"generate", "random", "--n", "5", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(ivo::serialize_instance(ivo::parse_instance(a.out)) == a.out);
    CHECK(run({"generate", "lemma14", "--n", "1"}).code == 2);
    CHECK(run({"generate", "partition", "--items", "1", "--x0", "2"}).code == 2);
}

TEST_CASE("verify passes on correct solvers and flags bad class declarations") {
    CHECK(run({"verify", "--random", "6", "--count", "100", "--seed", "1"}).code == 0);
    CHECK(run({"verify", instance_file("empty_v.json", {})}).code == 0);
    const Run bad = run({"verify", instance_file("missub.json", {{0, 3}, {1, 2}},
                                                  CostFunction::pow2(ivo::FunctionClass::sub_shifted))});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("class declaration suspect") != std::string::npos);
    CHECK(bad.out.find("minimal failing instance") != std::string::npos);
}

TEST_CASE("svg dashed segments are the exposed parts") {
    struct Fixture {
        std::string name;
        std::vector<std::pair<long long, long long>> spans;
        ivo::Ordering ordering;
    };
    const std::vector<Fixture> fixtures{
        {"overlapping.json", {{0, 10}, {1, 3}, {2, 6}, {5, 8}, {7, 9}}, {1, 3, 0, 2, 4}},
        {"single.json", {{2, 7}}, {0}},
        {"disjoint.json", {{0, 1}, {2, 4}, {5, 6}}, {2, 0, 1}},
    };
    for (const auto& fx : fixtures) {
        CAPTURE(fx.name);
        const std::string f = instance_file(fx.name, fx.spans);
        std::string order_arg;
        for (auto j : fx.ordering) order_arg += (order_arg.empty() ? "" : ",") + std::to_string(j + 1);
        const Run r = run({"plot", f, "--ordering", order_arg});
        REQUIRE(r.code == 0);
        Instance inst;
        for (auto [a, b] : fx.spans) inst.intervals.emplace_back(Rat(a), Rat(b));
        CHECK(dashed(r.out) == exposed_of(inst, fx.ordering));
        CHECK(run({"plot", f, "--ordering", order_arg}).out == r.out);

        // Pixel extents are the exposed parts under the layout's affine map.
        const auto layout = ivo::layout_svg(inst, fx.ordering);
        const auto exposed = ivo::cost_of_ordering(inst, fx.ordering).exposed;
        for (std::size_t p = 0; p < layout.bars.size(); ++p) {
            std::vector<ivo::Interval> dashes;
            for (const auto& s : layout.bars[p].segments) {
                CHECK(s.x_from == layout.margin + (s.span.start() - layout.x_origin) * layout.x_scale);
                CHECK(s.x_to == layout.margin + (s.span.end() - layout.x_origin) * layout.x_scale);
                if (s.exposed) dashes.push_back(s.span);
            }
            CHECK(dashes == exposed[p].components());
        }
    }
    // A single interval and disjoint intervals are drawn fully dashed.
    CHECK(dashed(run({"plot", instance_file("single2.json", {{2, 7}}), "--solve"}).out).size() == 1);
    CHECK(dashed(run({"plot", instance_file("disj2.json", {{0, 1}, {2, 4}, {5, 6}}), "--solve"}).out).size() == 3);
}

TEST_CASE("plot writes to a file") {
    const std::string f = instance_file("plotme.json", {{0, 3}, {1, 2}});
    const std::string out = (fs::temp_directory_path() / "ivo_cli_tests" / "plot.svg").string();
    CHECK(run({"plot", f, "--solve", "-o", out}).code == 0);
    std::ifstream in(out);
    std::stringstream s;
    s << in.rdbuf();
    CHECK(s.str().rfind("<?xml", 0) == 0);
    CHECK(s.str().find("</svg>") != std::string::npos);
}
