#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ivo/errors.hpp"
#include "ivo/exposed.hpp"
#include "ivo/generators.hpp"
#include "ivo/instance_json.hpp"
#include "ivo/solver.hpp"
#include "ivo/svg.hpp"

namespace ivo::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kCapExceeded = 3;
constexpr int kInfeasible = 4;

Instance read_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

FunctionClass class_from_string(const std::string& name) {
    if (name == "arbitrary") return FunctionClass::arbitrary;
    if (name == "sub") return FunctionClass::sub_shifted;
    if (name == "super") return FunctionClass::super_shifted;
    throw InputError("unknown function class \"" + name + "\"");
}

const std::vector<std::string> kCostNames{"pow2", "square", "linear", "sqrt", "partition"};

/// Named cost functions with the class they actually belong to.
CostFunction named_cost(const std::string& name) {
    if (name == "pow2") return CostFunction::pow2(FunctionClass::super_shifted);
    if (name == "square") return CostFunction::polynomial({0, 0, 1}, FunctionClass::super_shifted);
    if (name == "linear") return CostFunction::linear(1, 0, FunctionClass::sub_shifted);
    if (name == "sqrt") return CostFunction::sqrt(1, FunctionClass::sub_shifted);
    if (name == "partition") return partition_cost(PartitionReductionParams{{1}, 1, 4, 1, 2, 3});
    throw InputError("unknown cost \"" + name + "\"");
}

json cost_to_json(const Cost& c) {
    if (c.backend() == CostBackend::exact) return rat_to_json(c.exact());
    return c.to_string();
}

json union_to_json(const DisjointUnion& u) {
    json arr = json::array();
    for (const auto& c : u.components()) arr.push_back(json::array({rat_to_json(c.start()), rat_to_json(c.end())}));
    return arr;
}

Algorithm parse_algorithm(const std::vector<std::string>& words) {
    Algorithm algo;
    if (words.empty()) return algo;
    algo.kind = algorithm_from_string(words[0]);
    if (algo.kind == AlgorithmKind::alpha) {
        if (words.size() != 2) throw InputError("alpha needs a parameter K");
        try {
            algo.alpha = std::stoul(words[1]);
        } catch (const std::exception&) {
            throw InputError("alpha parameter must be a positive integer");
        }
        if (algo.alpha < 1) throw InputError("alpha parameter must be a positive integer");
    } else if (words.size() != 1) {
        throw InputError(words[0] + " takes no parameter");
    }
    return algo;
}

int cmd_solve(const std::string& file, const std::vector<std::string>& algorithm, bool as_json, std::ostream& out) {
    const Instance inst = read_instance(file);
    const Solution sol = solve(inst, parse_algorithm(algorithm));
    const CostBackend backend = inst.backend();

    std::optional<bool> decision;
    if (inst.threshold) decision = sol.total <= Cost(*inst.threshold).in(sol.total.backend());

    if (as_json) {
        json report;
        report["algorithm"] = to_string(sol.algorithm);
        report["backend"] = to_string(backend);
        json ordering = json::array();
        json positions = json::array();
        for (std::size_t p = 0; p < sol.ordering.size(); ++p) {
            ordering.push_back(sol.ordering[p] + 1);
            const Rat len = length(sol.exposed[p]);
            positions.push_back({{"interval", sol.ordering[p] + 1},
                                 {"exposed", union_to_json(sol.exposed[p])},
                                 {"length", rat_to_json(len)},
                                 {"cost", cost_to_json(eval_cost(inst.cost, len, backend))}});
        }
        report["ordering"] = ordering;
        report["positions"] = positions;
        report["total"] = cost_to_json(sol.total);
        if (inst.threshold) {
            report["W"] = rat_to_json(*inst.threshold);
            report["decision"] = *decision;
        }
        out << report.dump(2) << '\n';
        return kOk;
    }

    out << "algorithm: " << to_string(sol.algorithm) << '\n';
    out << "ordering:";
    for (auto j : sol.ordering) out << ' ' << j + 1;
    out << '\n';
    for (std::size_t p = 0; p < sol.ordering.size(); ++p) {
        const Rat len = length(sol.exposed[p]);
        out << "  " << p + 1 << ". interval " << sol.ordering[p] + 1 << ' ' << inst.intervals[sol.ordering[p]]
            << "  exposed " << sol.exposed[p] << "  length " << len << "  cost "
            << eval_cost(inst.cost, len, backend) << '\n';
    }
    out << "total: " << sol.total << '\n';
    if (decision) out << "decision: " << (*decision ? "yes" : "no") << " (W = " << *inst.threshold << ")\n";
    return kOk;
}

int cmd_enumerate(const std::string& file, const std::vector<std::string>& mode, std::ostream& out) {
    const Instance inst = read_instance(file);
    const std::string name = mode.empty() ? "full" : mode[0];
    std::size_t alpha = 1;
    if (name == "alpha") {
        if (mode.size() != 2) throw InputError("alpha needs a parameter K");
        alpha = parse_algorithm({"alpha", mode[1]}).alpha;
    } else if (mode.size() > 1) {
        throw InputError(name + " takes no parameter");
    }

    ExposedPartSet parts;
    if (name == "full") {
        parts = enumerate_full(inst);
    } else if (name == "oracle") {
        parts = enumerate_oracle(inst);
    } else if (name == "intervals") {
        parts = enumerate_interval_parts(inst);
    } else if (name == "super") {
        parts = enumerate_super_parts(inst);
    } else if (name == "pairwise") {
        parts = enumerate_pairwise(inst);
    } else if (name == "alpha") {
        parts = enumerate_alpha(inst, alpha);
    } else if (name == "sbound") {
        parts = enumerate_sbound(inst);
    } else {
        throw InputError("unknown enumeration mode \"" + name + "\"");
    }
    for (const auto& part : parts.parts) out << part << "  length " << length(part) << '\n';
    out << "count: " << parts.size() << '\n';
    return kOk;
}

int cmd_classify(const std::string& file, std::ostream& out) {
    const Instance inst = read_instance(file);
    const InstanceStats st = classify(inst);
    auto yes_no = [](bool b) { return b ? "yes" : "no"; };
    out << "intervals: " << inst.size() << '\n'
        << "components: " << st.component_count << '\n'
        << "agreeable: " << yes_no(st.is_agreeable) << '\n'
        << "laminar: " << yes_no(st.is_laminar) << '\n'
        << "pairwise connected: " << yes_no(st.is_pairwise_connected) << '\n'
        << "max proper subintervals: " << st.max_subintervals << '\n'
        << "cost: " << to_string(inst.cost.kind()) << " (declared " << to_string(inst.cost.declared_class())
        << ")\n"
        << "backend: " << to_string(inst.backend()) << '\n';
    return kOk;
}

struct CheckResult {
    bool ok = true;
    bool class_suspect = false;
    std::string detail;
};

CheckResult check_instance(const Instance& inst) {
    CheckResult r;
    std::vector<std::pair<std::string, Cost>> core;
    if (inst.size() <= 8) core.emplace_back("brute", brute_force(inst).total);
    if (inst.size() <= 20) core.emplace_back("subset-dp", subset_dp(inst).total);
    core.emplace_back("full", solve(inst, {AlgorithmKind::full, 1}).total);
    const Cost& reference = core.front().second;
    for (const auto& [name, value] : core) {
        if (!costs_agree(reference, value)) {
            r.ok = false;
            r.detail = core.front().first + " = " + reference.to_string() + " but " + name + " = " +
                       value.to_string();
            return r;
        }
    }

    std::vector<AlgorithmKind> restricted;
    const FunctionClass cls = inst.cost.declared_class();
    if (cls == FunctionClass::sub_shifted) restricted.push_back(AlgorithmKind::sub);
    if (cls == FunctionClass::super_shifted) restricted.push_back(AlgorithmKind::super);
    const bool pairwise = classify(inst).is_pairwise_connected;
    if (pairwise) restricted.push_back(AlgorithmKind::pairwise);
    for (auto kind : restricted) {
        std::string got;
        bool agrees = false;
        try {
            Cost value = solve(inst, {kind, 1}).total;
            agrees = costs_agree(reference, value);
            got = value.to_string();
        } catch (const InfeasibleEnumeration& e) {
            got = std::string("infeasible (") + e.what() + ")";
        }
        if (!agrees) {
            r.ok = false;
            r.class_suspect = kind != AlgorithmKind::pairwise;
            r.detail = "optimum " + reference.to_string() + " but " + to_string(kind) + " path gives " + got;
            return r;
        }
    }
    return r;
}

/// Drops intervals one at a time while the instance keeps failing.
Instance shrink(Instance inst) {
    bool progress = true;
    while (progress && inst.size() > 1) {
        progress = false;
        for (std::size_t i = 0; i < inst.size(); ++i) {
            Instance smaller = inst;
            smaller.intervals.erase(smaller.intervals.begin() + static_cast<std::ptrdiff_t>(i));
            if (!check_instance(smaller).ok) {
                inst = std::move(smaller);
                progress = true;
                break;
            }
        }
    }
    return inst;
}

int report_failure(const Instance& inst, std::ostream& out) {
    const Instance minimal = shrink(inst);
    const CheckResult r = check_instance(minimal);
    out << "FAIL: " << r.detail << '\n';
    if (r.class_suspect) {
        out << "class declaration suspect: f is declared " << to_string(minimal.cost.declared_class());
        try {
            auto bad = spot_check_class(minimal.cost, 2000, 0);
            if (!bad.empty()) out << " but violates it at x = " << bad.front().x << ", y = " << bad.front().y;
        } catch (const Error&) {
        }
        out << '\n';
    }
    out << "minimal failing instance:\n" << serialize_instance(minimal);
    return kVerifyFailed;
}

int cmd_verify(const std::string& file, std::size_t random_n, std::size_t count, std::uint64_t seed,
               long long range, const std::string& cost_name, std::ostream& out) {
    if (!file.empty()) {
        const Instance inst = read_instance(file);
        if (!check_instance(inst).ok) return report_failure(inst, out);
        out << "PASS: 1 instance\n";
        return kOk;
    }
    if (random_n == 0) throw InputError("verify needs a file or --random N");
    if (random_n > 8) throw CapExceeded("verify --random is capped at 8 intervals");
    std::vector<std::string> names = cost_name.empty() ? kCostNames : std::vector<std::string>{cost_name};
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t n = 1 + static_cast<std::size_t>(k % random_n);
        Instance inst = gen_random(n, range, seed + k, RandomFamily::general, named_cost(names[k % names.size()]));
        if (!check_instance(inst).ok) {
            out << "instance " << k + 1 << " of " << count << " failed\n";
            return report_failure(inst, out);
        }
    }
    out << "PASS: " << count << " instances\n";
    return kOk;
}

Ordering parse_ordering(const std::string& text, std::size_t n) {
    Ordering ord;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            throw InputError("bad ordering entry \"" + item + "\"");
        }
        if (pos != item.size() || v < 1) throw InputError("bad ordering entry \"" + item + "\"");
        ord.push_back(v - 1);
    }
    if (ord.size() != n) throw InputError("ordering must list every interval exactly once");
    return ord;
}

int cmd_plot(const std::string& file, const std::string& ordering, bool use_solver, const std::string& output,
             long long width, std::ostream& out) {
    const Instance inst = read_instance(file);
    Ordering ord;
    if (use_solver) {
        ord = solve_auto(inst).ordering;
    } else if (!ordering.empty()) {
        ord = parse_ordering(ordering, inst.size());
    } else {
        throw InputError("plot needs --ordering or --solve");
    }
    if (!is_valid_ordering(inst, ord)) throw InputError("ordering is not a permutation of the intervals");
    const std::string svg = render_svg(layout_svg(inst, ord, Rat(width)));
    if (output.empty() || output == "-") {
        out << svg;
    } else {
        std::ofstream f(output);
        if (!f) throw InputError("cannot write " + output);
        f << svg;
    }
    return kOk;
}

Rat parse_rat(const std::string& text) {
    try {
        return Rat::parse(text);
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("bad rational \"" + text + "\"");
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solver kit for interval ordering with length-dependent costs", "ivo"};
    app.require_subcommand(1);

    std::string file;
    std::vector<std::string> algorithm;
    bool as_json = false;
    auto* solve_cmd = app.add_subcommand("solve", "Find an optimal ordering");
    solve_cmd->add_option("file", file, "Instance JSON")->required();
    solve_cmd->add_option("--algorithm", algorithm,
                          "auto|full|sub|super|pairwise|alpha K|sbound|subset-dp|brute")
        ->expected(1, 2);
    solve_cmd->add_flag("--json", as_json, "Machine-readable report");

    std::vector<std::string> mode;
    auto* enum_cmd = app.add_subcommand("enumerate", "List exposed parts");
    enum_cmd->add_option("file", file, "Instance JSON")->required();
    enum_cmd->add_option("--mode", mode, "full|oracle|intervals|super|pairwise|alpha K|sbound")->expected(1, 2);

    auto* classify_cmd = app.add_subcommand("classify", "Structural statistics of an instance");
    classify_cmd->add_option("file", file, "Instance JSON")->required();

    auto* gen_cmd = app.add_subcommand("generate", "Print a generated instance as JSON");
    gen_cmd->require_subcommand(1);
    std::size_t n = 0;
    std::string cost_name = "pow2";
    std::string class_name;
    auto add_cost_options = [&](CLI::App* cmd) {
        cmd->add_option("--cost", cost_name, "pow2|square|linear|sqrt|partition")->capture_default_str();
        cmd->add_option("--class", class_name, "Override the declared class: arbitrary|sub|super");
    };
    auto* lemma_cmd = gen_cmd->add_subcommand("lemma14", "Nested doubling family");
    lemma_cmd->add_option("--n", n, "Number of intervals (>= 2)")->required();
    add_cost_options(lemma_cmd);

    std::vector<long long> items;
    std::string eps = "1";
    std::string x0 = "4";
    std::vector<std::string> slopes{"1", "2", "3"};
    auto* part_cmd = gen_cmd->add_subcommand("partition", "Reduction from PARTITION");
    part_cmd->add_option("--items", items, "Positive integers")->required();
    part_cmd->add_option("--eps", eps, "Rational eps > 0")->capture_default_str();
    part_cmd->add_option("--x0", x0, "Rational x0 >= 3 eps")->capture_default_str();
    part_cmd->add_option("--slopes", slopes, "c1 < c2 < c3")->expected(3);

    std::uint64_t seed = 0;
    long long range = 16;
    std::string family = "general";
    auto* rand_cmd = gen_cmd->add_subcommand("random", "Seeded random instance");
    rand_cmd->add_option("--n", n, "Number of intervals")->required();
    rand_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
    rand_cmd->add_option("--range", range, "Endpoints lie in [0, range]")->capture_default_str();
    rand_cmd->add_option("--family", family, "general|agreeable|laminar|pairwise")->capture_default_str();
    add_cost_options(rand_cmd);

    std::size_t random_n = 0;
    std::size_t count = 100;
    std::string verify_cost;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check all solvers");
    verify_cmd->add_option("file", file, "Instance JSON");
    verify_cmd->add_option("--random", random_n, "Maximum n of random instances (<= 8)");
    verify_cmd->add_option("--count", count, "Number of random instances")->capture_default_str();
    verify_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
    verify_cmd->add_option("--range", range, "Endpoints lie in [0, range]")->capture_default_str();
    verify_cmd->add_option("--cost", verify_cost, "Restrict to one cost: pow2|square|linear|sqrt|partition");

    std::string ordering;
    bool use_solver = false;
    std::string output;
    long long width = 800;
    auto* plot_cmd = app.add_subcommand("plot", "Render an ordering as SVG");
    plot_cmd->add_option("file", file, "Instance JSON")->required();
    plot_cmd->add_option("--ordering", ordering, "1-based comma-separated permutation");
    plot_cmd->add_flag("--solve", use_solver, "Plot an optimal ordering");
    plot_cmd->add_option("-o,--output", output, "Output file (default stdout)");
    plot_cmd->add_option("--width", width, "Width in pixels")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*solve_cmd) return cmd_solve(file, algorithm, as_json, out);
        if (*enum_cmd) return cmd_enumerate(file, mode, out);
        if (*classify_cmd) return cmd_classify(file, out);
        if (*verify_cmd) return cmd_verify(file, random_n, count, seed, range, verify_cost, out);
        if (*plot_cmd) return cmd_plot(file, ordering, use_solver, output, width, out);
        if (*gen_cmd) {
            Instance inst;
            auto chosen_cost = [&]() {
                CostFunction f = named_cost(cost_name);
                return class_name.empty() ? f : f.with_class(class_from_string(class_name));
            };
            if (*lemma_cmd) {
                inst = gen_lemma14(n, chosen_cost());
            } else if (*part_cmd) {
                PartitionReductionParams p;
                p.items = items;
                p.eps = parse_rat(eps);
                p.x0 = parse_rat(x0);
                p.c1 = parse_rat(slopes[0]);
                p.c2 = parse_rat(slopes[1]);
                p.c3 = parse_rat(slopes[2]);
                inst = gen_partition_reduction(p);
            } else {
                inst = gen_random(n, range, seed, random_family_from_string(family), chosen_cost());
            }
            out << serialize_instance(inst);
            return kOk;
        }
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const InfeasibleEnumeration& e) {
        err << "error: " << e.what() << '\n';
        return kInfeasible;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace ivo::cli
