#include "ivo/instance.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ivo/errors.hpp"

namespace ivo {

CostBackend Instance::backend() const {
    switch (cost.kind()) {
        case CostKind::sqrt: return CostBackend::extended;
        case CostKind::pow2:
            for (const auto& iv : intervals) {
                if (!iv.start().is_integer() || !iv.end().is_integer()) return CostBackend::extended;
            }
            return CostBackend::exact;
        default: return CostBackend::exact;
    }
}

bool is_valid_ordering(const Instance& inst, const Ordering& ord) {
    if (ord.size() != inst.size()) return false;
    std::vector<bool> seen(inst.size(), false);
    for (auto i : ord) {
        if (i >= inst.size() || seen[i]) return false;
        seen[i] = true;
    }
    return true;
}

DisjointUnion covered_area(const std::vector<Interval>& intervals) {
    return DisjointUnion::of(intervals);
}

OrderingCost cost_of_ordering(const Instance& inst, const Ordering& ord) {
    if (!is_valid_ordering(inst, ord)) throw InputError("ordering is not a permutation of the intervals");
    const CostBackend backend = inst.backend();
    OrderingCost out{Cost::zero(backend), {}};
    out.exposed.reserve(ord.size());
    DisjointUnion covered;
    for (auto idx : ord) {
        DisjointUnion piece(inst.intervals[idx]);
        DisjointUnion exposed = subtract(piece, covered);
        out.total += eval_cost(inst.cost, length(exposed), backend);
        covered = unite(covered, piece);
        out.exposed.push_back(std::move(exposed));
    }
    return out;
}

InstanceStats classify(const Instance& inst) {
    InstanceStats st;
    const auto& ivs = inst.intervals;
    const std::size_t n = ivs.size();

    std::vector<Interval> sorted = ivs;
    std::sort(sorted.begin(), sorted.end());
    st.is_agreeable = std::is_sorted(sorted.begin(), sorted.end(),
                                     [](const Interval& a, const Interval& b) { return a.end() < b.end(); });

    st.is_laminar = true;
    st.is_pairwise_connected = n > 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t proper = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto& a = ivs[i];
            const auto& b = ivs[j];
            if (a.contains(b) && a != b) ++proper;
            if (j > i) {
                if (a.intersects(b) && !a.contains(b) && !b.contains(a)) st.is_laminar = false;
                if (!a.meets(b)) st.is_pairwise_connected = false;
            }
        }
        st.max_subintervals = std::max(st.max_subintervals, proper);
    }
    st.component_count = covered_area(ivs).size();
    return st;
}

std::vector<ComponentInstance> split_components(const Instance& inst) {
    DisjointUnion area = covered_area(inst.intervals);
    std::vector<ComponentInstance> out(area.size());
    for (auto& c : out) {
        c.instance.cost = inst.cost;
        c.instance.threshold = std::nullopt;
    }
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const auto& iv = inst.intervals[i];
        const auto& comps = area.components();
        auto it = std::upper_bound(comps.begin(), comps.end(), iv.start(),
                                   [](const Rat& p, const Interval& c) { return p < c.start(); });
        auto k = static_cast<std::size_t>(std::prev(it) - comps.begin());
        out[k].instance.intervals.push_back(iv);
        out[k].indices.push_back(i);
    }
    return out;
}

std::vector<ClassViolation> spot_check_class(const CostFunction& f, std::size_t samples,
                                             std::uint64_t seed) {
    if (f.declared_class() == FunctionClass::arbitrary) {
        throw PreconditionError("spot_check_class needs a declared sub or super class");
    }
    std::mt19937_64 rng(seed);
    // Denominators 1, 2, 4 and numerators up to 8 * den cover [0, 8].
    auto draw = [&rng]() {
        long long den = 1LL << (rng() % 3);
        long long num = static_cast<long long>(rng() % static_cast<std::uint64_t>(8 * den + 1));
        return Rat(num) / Rat(den);
    };
    std::vector<ClassViolation> out;
    for (std::size_t s = 0; s < samples; ++s) {
        Rat x = draw();
        Rat y = draw();
        Rat zero;
        CostBackend b = CostBackend::exact;
        for (const Rat* v : {&x, &y}) {
            if (f.natural_backend(*v) == CostBackend::extended) b = CostBackend::extended;
        }
        if (f.natural_backend(x + y) == CostBackend::extended) b = CostBackend::extended;
        Cost joint = eval_cost(f, x + y, b) + eval_cost(f, zero, b);
        Cost split = eval_cost(f, x, b) + eval_cost(f, y, b);
        bool ok = f.declared_class() == FunctionClass::super_shifted ? split <= joint : joint <= split;
        if (!ok) out.push_back({x, y});
    }
    return out;
}

}  // namespace ivo
