#include "ivo/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ivo/errors.hpp"

namespace ivo {

namespace {

Rat power_of_two(std::size_t e) {
    mpz_class v = 1;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return Rat(v);
}

}  // namespace

Instance gen_lemma14(std::size_t n, CostFunction cost) {
    if (n < 2) throw InputError("lemma14 family needs n >= 2");
    Instance inst;
    inst.cost = std::move(cost);
    for (std::size_t i = 1; i < n; ++i) inst.intervals.emplace_back(power_of_two(i), power_of_two(i + 1));
    inst.intervals.emplace_back(Rat{}, power_of_two(n));
    return inst;
}

CostFunction partition_cost(const PartitionReductionParams& p) {
    if (!(p.eps > Rat{})) throw InputError("eps must be positive");
    if (p.x0 - p.eps < p.eps * Rat{2}) throw InputError("need x0 - eps >= 2 eps");
    if (!(p.c1 < p.c2 && p.c2 < p.c3)) throw InputError("slopes must satisfy c1 < c2 < c3");
    return CostFunction::piecewise_linear(Rat{}, {p.c2, p.c1, p.c3}, {p.x0 - p.eps, p.x0});
}

Instance gen_partition_reduction(const PartitionReductionParams& p) {
    if (p.items.empty()) throw InputError("partition reduction needs at least one item");
    for (auto x : p.items) {
        if (x <= 0) throw InputError("partition items must be positive");
    }
    Instance inst;
    inst.cost = partition_cost(p);
    Rat total;
    for (auto x : p.items) total += Rat(x);
    const Rat unit = p.eps * Rat{2} / total;
    Rat prefix;
    for (auto x : p.items) {
        Rat next = prefix + Rat(x);
        inst.intervals.emplace_back(unit * prefix, unit * next);
        prefix = next;
    }
    inst.intervals.emplace_back(Rat{}, p.x0 + p.eps);
    inst.threshold = (eval_cost(inst.cost, p.eps) + eval_cost(inst.cost, p.x0)).exact();
    return inst;
}

bool has_partition(const std::vector<long long>& items) {
    long long total = std::accumulate(items.begin(), items.end(), 0LL);
    if (total % 2 != 0) return false;
    std::vector<char> reach(static_cast<std::size_t>(total / 2 + 1), 0);
    reach[0] = 1;
    for (auto x : items) {
        for (long long s = total / 2; s >= x; --s) {
            if (reach[static_cast<std::size_t>(s - x)]) reach[static_cast<std::size_t>(s)] = 1;
        }
    }
    return reach.back() != 0;
}

std::string to_string(RandomFamily family) {
    switch (family) {
        case RandomFamily::general: return "general";
        case RandomFamily::agreeable: return "agreeable";
        case RandomFamily::laminar: return "laminar";
        case RandomFamily::pairwise: return "pairwise";
    }
    return "?";
}

RandomFamily random_family_from_string(const std::string& name) {
    for (auto f : {RandomFamily::general, RandomFamily::agreeable, RandomFamily::laminar, RandomFamily::pairwise}) {
        if (to_string(f) == name) return f;
    }
    throw InputError("unknown random family \"" + name + "\"");
}

Instance gen_random(std::size_t n, long long coord_range, std::uint64_t seed, RandomFamily family,
                    CostFunction cost) {
    if (n < 1) throw InputError("random instance needs n >= 1");
    if (coord_range < 1) throw InputError("coordinate range must be at least 1");
    // Plain modulo draws keep the output identical across standard libraries.
    std::mt19937_64 rng(seed);
    auto below = [&rng](long long m) { return static_cast<long long>(rng() % static_cast<std::uint64_t>(m)); };
    auto draw = [&]() {
        long long a = below(coord_range);
        long long b = a + 1 + below(coord_range - a);
        return std::pair{a, b};
    };

    std::vector<std::pair<long long, long long>> raw;
    switch (family) {
        case RandomFamily::general:
            for (std::size_t i = 0; i < n; ++i) raw.push_back(draw());
            break;
        case RandomFamily::agreeable: {
            std::vector<long long> starts;
            std::vector<long long> ends;
            for (std::size_t i = 0; i < n; ++i) {
                auto [a, b] = draw();
                starts.push_back(a);
                ends.push_back(b);
            }
            std::sort(starts.begin(), starts.end());
            std::sort(ends.begin(), ends.end());
            for (std::size_t i = 0; i < n; ++i) raw.emplace_back(starts[i], ends[i]);
            break;
        }
        case RandomFamily::laminar:
            while (raw.size() < n) {
                std::pair<long long, long long> cand = draw();
                bool ok = false;
                for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
                    if (attempt > 0) cand = draw();
                    ok = std::all_of(raw.begin(), raw.end(), [&](const auto& o) {
                        bool disjoint = cand.second <= o.first || o.second <= cand.first;
                        bool inside = o.first <= cand.first && cand.second <= o.second;
                        bool around = cand.first <= o.first && o.second <= cand.second;
                        return disjoint || inside || around;
                    });
                }
                if (!ok) cand = raw[static_cast<std::size_t>(below(static_cast<long long>(raw.size())))];
                raw.push_back(cand);
            }
            break;
        case RandomFamily::pairwise: {
            const long long p = coord_range / 2;
            for (std::size_t i = 0; i < n; ++i) {
                long long a = below(p + 1);
                long long b = p + 1 + below(coord_range - p);
                raw.emplace_back(a, b);
            }
            break;
        }
    }

    Instance inst;
    inst.cost = std::move(cost);
    for (auto [a, b] : raw) inst.intervals.emplace_back(Rat(a), Rat(b));
    return inst;
}

}  // namespace ivo
