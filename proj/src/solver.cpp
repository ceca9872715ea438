#include "ivo/solver.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

#include "ivo/errors.hpp"
#include "ranked.hpp"

namespace ivo {

using detail::RankedPart;

std::string to_string(AlgorithmKind kind) {
    switch (kind) {
        case AlgorithmKind::automatic: return "auto";
        case AlgorithmKind::full: return "full";
        case AlgorithmKind::sub: return "sub";
        case AlgorithmKind::super: return "super";
        case AlgorithmKind::pairwise: return "pairwise";
        case AlgorithmKind::alpha: return "alpha";
        case AlgorithmKind::sbound: return "sbound";
        case AlgorithmKind::subset_dp: return "subset-dp";
        case AlgorithmKind::brute: return "brute";
    }
    return "?";
}

AlgorithmKind algorithm_from_string(const std::string& name) {
    for (auto k : {AlgorithmKind::automatic, AlgorithmKind::full, AlgorithmKind::sub, AlgorithmKind::super,
                   AlgorithmKind::pairwise, AlgorithmKind::alpha, AlgorithmKind::sbound,
                   AlgorithmKind::subset_dp, AlgorithmKind::brute}) {
        if (to_string(k) == name) return k;
    }
    throw InputError("unknown algorithm \"" + name + "\"");
}

namespace {

class CostCache {
public:
    CostCache(const CostFunction& f, CostBackend backend) : f_(f), backend_(backend) {}

    const Cost& operator()(const Rat& x) {
        auto it = cache_.find(x);
        if (it == cache_.end()) it = cache_.emplace(x, eval_cost(f_, x, backend_)).first;
        return it->second;
    }

private:
    const CostFunction& f_;
    CostBackend backend_;
    std::map<Rat, Cost> cache_;
};

struct PreparedPart {
    RankedPart spans;
    std::vector<std::size_t> gap_ids;
    std::size_t source;  // index into ExposedPartSet::parts
};

/// Per-part value f(|E|) + sum OPT(gap), computed on first use.
struct InnerValue {
    enum class State { unknown, ready, dead } state = State::unknown;
    Cost value;
    std::size_t count = 0;
};

Solution finish_solution(const Instance& inst, Ordering ordering, AlgorithmKind tag) {
    OrderingCost oc = cost_of_ordering(inst, ordering);
    Solution s;
    s.total = std::move(oc.total);
    s.ordering = std::move(ordering);
    s.exposed = std::move(oc.exposed);
    s.algorithm = tag;
    return s;
}

DpResult dp_run(const Instance& inst, const CoveredIntervalTable& table, const ExposedPartSet& parts,
                AlgorithmKind tag) {
    const CostBackend backend = inst.backend();
    DpResult result{{}, {}, Cost::zero(backend)};
    result.solution.total = Cost::zero(backend);
    result.solution.algorithm = tag;
    if (inst.empty()) return result;

    const DisjointUnion area = covered_area(inst.intervals);
    if (!is_single_interval(area)) {
        throw PreconditionError("dynamic program needs a single covered interval; split components first");
    }
    const Grid& grid = table.grid();
    const int g = grid.size();
    const auto& entries = table.entries();
    const auto& spans = table.spans();
    const auto& ivs = table.interval_spans();

    std::vector<PreparedPart> prepared;
    std::vector<std::vector<std::size_t>> bucket(static_cast<std::size_t>(g));
    for (std::size_t i = 0; i < parts.parts.size(); ++i) {
        auto ranked = detail::to_ranked(parts.parts[i], grid);
        if (!ranked || ranked->empty()) continue;
        PreparedPart pp{std::move(*ranked), {}, i};
        bool ok = true;
        for (std::size_t c = 1; c < pp.spans.size() && ok; ++c) {
            auto id = table.lookup(Span{pp.spans[c - 1].second, pp.spans[c].first});
            if (id) {
                pp.gap_ids.push_back(*id);
            } else {
                ok = false;
            }
        }
        if (!ok) continue;
        bucket[static_cast<std::size_t>(pp.spans.front().first)].push_back(prepared.size());
        prepared.push_back(std::move(pp));
    }

    CostCache f(inst.cost, backend);
    std::optional<Cost> f0;
    auto zero_cost = [&]() -> const Cost& {
        if (!f0) f0 = f(Rat{});
        return *f0;
    };

    DpTable& dp = result.table;
    dp.opt.assign(entries.size(), std::nullopt);
    dp.choice.assign(entries.size(), std::nullopt);
    std::vector<InnerValue> inner(prepared.size());

    auto inner_of = [&](std::size_t p) -> const InnerValue& {
        InnerValue& iv = inner[p];
        if (iv.state != InnerValue::State::unknown) return iv;
        iv.value = f(detail::ranked_length(prepared[p].spans, grid));
        for (auto id : prepared[p].gap_ids) {
            if (!dp.opt[id]) {
                iv.state = InnerValue::State::dead;
                return iv;
            }
            iv.value += *dp.opt[id];
            iv.count += entries[id].contained_count;
        }
        iv.state = InnerValue::State::ready;
        return iv;
    };

    std::vector<int> reach;
    for (std::size_t cid = 0; cid < entries.size(); ++cid) {
        const auto [c1, c2] = spans[cid];
        const std::size_t count = entries[cid].contained_count;

        // reach[r - c1]: furthest end of an interval inside C starting in [c1, r].
        reach.assign(static_cast<std::size_t>(c2 - c1), -1);
        for (auto [a, b] : ivs) {
            if (c1 <= a && b <= c2) {
                auto& slot = reach[static_cast<std::size_t>(a - c1)];
                slot = std::max(slot, b);
            }
        }
        for (std::size_t r = 1; r < reach.size(); ++r) reach[r] = std::max(reach[r], reach[r - 1]);

        std::optional<Cost> best;
        std::optional<std::size_t> best_part;
        for (int s = c1; s < c2; ++s) {
            const int witness_end = reach[static_cast<std::size_t>(s - c1)];
            for (auto p : bucket[static_cast<std::size_t>(s)]) {
                const int t = prepared[p].spans.back().second;
                if (t > c2 || witness_end < t) continue;
                std::optional<std::size_t> left;
                std::optional<std::size_t> right;
                if (c1 < s) {
                    left = table.lookup(Span{c1, s});
                    if (!left || !dp.opt[*left]) continue;
                }
                if (t < c2) {
                    right = table.lookup(Span{t, c2});
                    if (!right || !dp.opt[*right]) continue;
                }
                const InnerValue& in = inner_of(p);
                if (in.state == InnerValue::State::dead) continue;

                std::size_t below = in.count;
                Cost value = in.value;
                if (left) {
                    value += *dp.opt[*left];
                    below += entries[*left].contained_count;
                }
                if (right) {
                    value += *dp.opt[*right];
                    below += entries[*right].contained_count;
                }
                if (below + 1 > count) throw std::logic_error("negative count of fully covered intervals");
                const std::size_t k = count - 1 - below;
                if (k > 0) value += zero_cost().scaled(static_cast<long long>(k));
                if (!best || value < *best) {
                    best = std::move(value);
                    best_part = p;
                }
            }
        }
        dp.opt[cid] = std::move(best);
        // Prepared index for now; mapped to the part-set index after reconstruction.
        dp.choice[cid] = best_part;
    }

    const auto top = table.lookup(area.components().front());
    if (!top || !dp.opt[*top]) {
        throw InfeasibleEnumeration("the " + to_string(parts.mode) +
                                    " exposed-part set admits no decomposition of the covered area");
    }
    result.dp_value = *dp.opt[*top];

    Ordering ordering;
    std::vector<bool> placed(inst.size(), false);
    std::function<void(std::size_t)> place = [&](std::size_t cid) {
        const auto [c1, c2] = spans[cid];
        const PreparedPart& pp = prepared[*dp.choice[cid]];
        const int s = pp.spans.front().first;
        const int t = pp.spans.back().second;
        if (c1 < s) place(*table.lookup(Span{c1, s}));
        for (auto id : pp.gap_ids) place(id);
        if (t < c2) place(*table.lookup(Span{t, c2}));
        for (std::size_t j = 0; j < ivs.size(); ++j) {
            auto [a, b] = ivs[j];
            if (!placed[j] && c1 <= a && b <= c2 && a <= s && t <= b) {
                placed[j] = true;
                ordering.push_back(j);
                break;
            }
        }
        for (std::size_t j = 0; j < ivs.size(); ++j) {
            auto [a, b] = ivs[j];
            if (!placed[j] && c1 <= a && b <= c2) {
                placed[j] = true;
                ordering.push_back(j);
            }
        }
    };
    place(*top);

    // Map prepared indices back to part-set indices for the public table.
    for (auto& c : dp.choice) {
        if (c) c = prepared[*c].source;
    }

    result.solution = finish_solution(inst, std::move(ordering), tag);
    if (backend == CostBackend::exact && !(result.solution.total == result.dp_value)) {
        throw std::logic_error("reconstructed ordering does not reproduce the dynamic-program value");
    }
    return result;
}

}  // namespace

DpResult dp_solve_detailed(const Instance& inst, const ExposedPartSet& parts, AlgorithmKind tag) {
    return dp_run(inst, build_covered_table(inst), parts, tag);
}

Solution dp_solve(const Instance& inst, const ExposedPartSet& parts, AlgorithmKind tag) {
    return dp_solve_detailed(inst, parts, tag).solution;
}

Solution subset_dp(const Instance& inst, std::size_t cap) {
    const std::size_t n = inst.size();
    if (n > cap || n > 30) {
        throw CapExceeded("subset DP is capped at " + std::to_string(std::min<std::size_t>(cap, 30)) +
                          " intervals, got " + std::to_string(n));
    }
    const CostBackend backend = inst.backend();
    const Grid grid(inst.intervals);
    // Elementary segment r is [coords[r], coords[r+1]); at most 2n - 1 <= 59 of them.
    std::vector<std::uint64_t> bits(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        auto [a, b] = grid.span(inst.intervals[j]);
        for (int r = a; r < b; ++r) bits[j] |= std::uint64_t{1} << r;
    }
    auto measure = [&](std::uint64_t mask) {
        Rat total;
        while (mask) {
            int r = std::countr_zero(mask);
            total += grid.length(Span{r, r + 1});
            mask &= mask - 1;
        }
        return total;
    };

    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<std::uint64_t> cover(full + 1, 0);
    for (std::size_t m = 1; m <= full; ++m) {
        cover[m] = cover[m & (m - 1)] | bits[static_cast<std::size_t>(std::countr_zero(m))];
    }
    std::unordered_map<std::uint64_t, Cost> fcache;
    auto f = [&](std::uint64_t exposed) -> const Cost& {
        auto it = fcache.find(exposed);
        if (it == fcache.end()) it = fcache.emplace(exposed, eval_cost(inst.cost, measure(exposed), backend)).first;
        return it->second;
    };

    std::vector<Cost> opt(full + 1, Cost::zero(backend));
    std::vector<std::uint8_t> last(full + 1, 0);
    for (std::size_t m = 1; m <= full; ++m) {
        bool have = false;
        for (std::size_t rest_bits = m; rest_bits; rest_bits &= rest_bits - 1) {
            const auto j = static_cast<std::size_t>(std::countr_zero(rest_bits));
            const std::size_t rest = m ^ (std::size_t{1} << j);
            Cost value = opt[rest] + f(bits[j] & ~cover[rest]);
            if (!have || value < opt[m]) {
                opt[m] = std::move(value);
                last[m] = static_cast<std::uint8_t>(j);
                have = true;
            }
        }
    }

    Ordering ordering(n);
    for (std::size_t m = full, pos = n; m; ) {
        const std::size_t j = last[m];
        ordering[--pos] = j;
        m ^= std::size_t{1} << j;
    }
    Solution s;
    s.total = opt[full];
    s.ordering = std::move(ordering);
    s.exposed = cost_of_ordering(inst, s.ordering).exposed;
    s.algorithm = AlgorithmKind::subset_dp;
    return s;
}

Solution brute_force(const Instance& inst, std::size_t cap) {
    const std::size_t n = inst.size();
    if (n > cap) {
        throw CapExceeded("brute force is capped at " + std::to_string(cap) + " intervals, got " +
                          std::to_string(n));
    }
    const CostBackend backend = inst.backend();
    CostCache f(inst.cost, backend);
    std::optional<Cost> best;
    Ordering best_order;
    Ordering current;
    std::vector<bool> used(n, false);

    std::function<void(const DisjointUnion&, const Cost&)> visit = [&](const DisjointUnion& covered,
                                                                       const Cost& sofar) {
        if (current.size() == n) {
            if (!best || sofar < *best) {
                best = sofar;
                best_order = current;
            }
            return;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            DisjointUnion piece(inst.intervals[j]);
            Cost next = sofar + f(length(subtract(piece, covered)));
            used[j] = true;
            current.push_back(j);
            visit(unite(covered, piece), next);
            current.pop_back();
            used[j] = false;
        }
    };
    visit(DisjointUnion{}, Cost::zero(backend));

    Solution s;
    s.total = best ? *best : Cost::zero(backend);
    s.ordering = std::move(best_order);
    s.exposed = cost_of_ordering(inst, s.ordering).exposed;
    s.algorithm = AlgorithmKind::brute;
    return s;
}

ExposedPartSet parts_for(const Instance& component, const CoveredIntervalTable& table, Algorithm algo) {
    switch (algo.kind) {
        case AlgorithmKind::automatic:
            switch (component.cost.declared_class()) {
                case FunctionClass::sub_shifted: return enumerate_interval_parts(component, table);
                case FunctionClass::super_shifted: return enumerate_super_parts(component);
                case FunctionClass::arbitrary:
                    if (classify(component).is_pairwise_connected) return enumerate_pairwise(component, table);
                    return enumerate_full(component);
            }
            break;
        case AlgorithmKind::full: return enumerate_full(component);
        case AlgorithmKind::sub: return enumerate_interval_parts(component, table);
        case AlgorithmKind::super: return enumerate_super_parts(component);
        case AlgorithmKind::pairwise: return enumerate_pairwise(component, table);
        case AlgorithmKind::alpha: return enumerate_alpha(component, table, algo.alpha);
        case AlgorithmKind::sbound: return enumerate_sbound(component, table);
        case AlgorithmKind::subset_dp:
        case AlgorithmKind::brute: break;
    }
    throw std::logic_error("no exposed-part set for algorithm " + to_string(algo.kind));
}

Solution solve(const Instance& inst, Algorithm algo) {
    if (algo.kind == AlgorithmKind::brute) return brute_force(inst);
    if (algo.kind == AlgorithmKind::subset_dp) return subset_dp(inst);

    const CostBackend backend = inst.backend();
    Ordering ordering;
    Cost component_sum = Cost::zero(backend);
    for (const auto& comp : split_components(inst)) {
        const CoveredIntervalTable table = build_covered_table(comp.instance);
        const ExposedPartSet parts = parts_for(comp.instance, table, algo);
        DpResult r = dp_run(comp.instance, table, parts, algo.kind);
        component_sum += r.solution.total;
        for (auto j : r.solution.ordering) ordering.push_back(comp.indices[j]);
    }
    Solution s = finish_solution(inst, std::move(ordering), algo.kind);
    if (backend == CostBackend::exact && !(s.total == component_sum)) {
        throw std::logic_error("component costs do not add up to the total");
    }
    return s;
}

Solution solve_auto(const Instance& inst) {
    return solve(inst, Algorithm{AlgorithmKind::automatic, 1});
}

bool decide(const Instance& inst) {
    if (!inst.threshold) throw InputError("decision needs a threshold W");
    Solution s = solve_auto(inst);
    return s.total <= Cost(*inst.threshold).in(s.total.backend());
}

}  // namespace ivo
