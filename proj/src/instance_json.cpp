#include "ivo/instance_json.hpp"

#include <initializer_list>

#include "ivo/errors.hpp"

namespace ivo {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                         std::string_view where) {
    if (!obj.is_object()) throw InputError(std::string(where) + " must be an object");
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (auto a : allowed) known = known || key == a;
        if (!known) throw InputError("unknown key \"" + key + "\" in " + std::string(where));
    }
}

mpz_class integer_from_json(const json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
        return mpz_class(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        Rat r = Rat::parse(j.get<std::string>());
        if (!r.is_integer()) throw InputError("expected an integer, got " + j.dump());
        return r.num();
    }
    throw InputError("expected an integer, got " + j.dump());
}

json integer_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
    return json(z.get_str());
}

std::vector<Rat> rat_list(const json& j, std::string_view where) {
    if (!j.is_array()) throw InputError(std::string(where) + " must be an array");
    std::vector<Rat> out;
    for (const auto& e : j) out.push_back(rat_from_json(e));
    return out;
}

json rat_list_to_json(const std::vector<Rat>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(rat_to_json(r));
    return out;
}

FunctionClass class_from_string(const std::string& s) {
    if (s == "arbitrary") return FunctionClass::arbitrary;
    if (s == "sub") return FunctionClass::sub_shifted;
    if (s == "super") return FunctionClass::super_shifted;
    throw InputError("unknown cost class \"" + s + "\"");
}

}  // namespace

json rat_to_json(const Rat& r) {
    return json::array({integer_to_json(r.num()), integer_to_json(r.den())});
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer() || j.is_string()) return Rat(integer_from_json(j));
    if (j.is_array() && j.size() == 2) {
        mpz_class den = integer_from_json(j[1]);
        if (den <= 0) throw InputError("rational denominator must be positive: " + j.dump());
        return Rat(integer_from_json(j[0]), den);
    }
    throw InputError("expected a rational [num, den] or an integer, got " + j.dump());
}

json cost_function_to_json(const CostFunction& f) {
    json params = json::object();
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, costs::Linear>) {
                params["c"] = rat_to_json(p.slope);
                params["b"] = rat_to_json(p.intercept);
            } else if constexpr (std::is_same_v<T, costs::Polynomial>) {
                params["coeffs"] = rat_list_to_json(p.coeffs);
            } else if constexpr (std::is_same_v<T, costs::PiecewiseLinear>) {
                params["origin"] = rat_to_json(p.origin);
                params["slopes"] = rat_list_to_json(p.slopes);
                params["breakpoints"] = rat_list_to_json(p.breakpoints);
            } else if constexpr (std::is_same_v<T, costs::Sqrt>) {
                params["c"] = rat_to_json(p.scale);
            } else if constexpr (std::is_same_v<T, costs::Table>) {
                json values = json::array();
                for (const auto& [x, y] : p.values) values.push_back(json::array({rat_to_json(x), rat_to_json(y)}));
                params["values"] = values;
            }
        },
        f.params());
    return json{{"kind", to_string(f.kind())}, {"params", params}, {"class", to_string(f.declared_class())}};
}

CostFunction cost_function_from_json(const json& j) {
    reject_unknown_keys(j, {"kind", "params", "class"}, "cost");
    if (!j.contains("kind") || !j["kind"].is_string()) throw InputError("cost.kind must be a string");
    const std::string kind = j["kind"].get<std::string>();
    FunctionClass cls = FunctionClass::arbitrary;
    if (j.contains("class")) {
        if (!j["class"].is_string()) throw InputError("cost.class must be a string");
        cls = class_from_string(j["class"].get<std::string>());
    }
    const json params = j.contains("params") ? j["params"] : json::object();
    auto get = [&](const char* key, Rat fallback) {
        return params.contains(key) ? rat_from_json(params[key]) : fallback;
    };
    auto require = [&](const char* key) -> const json& {
        if (!params.contains(key)) throw InputError("cost params of " + kind + " need \"" + key + "\"");
        return params[key];
    };

    if (kind == "pow2") {
        reject_unknown_keys(params, {}, "pow2 params");
        return CostFunction::pow2(cls);
    }
    if (kind == "linear") {
        reject_unknown_keys(params, {"c", "b"}, "linear params");
        return CostFunction::linear(get("c", Rat(1)), get("b", Rat(0)), cls);
    }
    if (kind == "polynomial") {
        reject_unknown_keys(params, {"coeffs"}, "polynomial params");
        return CostFunction::polynomial(rat_list(require("coeffs"), "coeffs"), cls);
    }
    if (kind == "piecewise_linear") {
        reject_unknown_keys(params, {"origin", "slopes", "breakpoints"}, "piecewise_linear params");
        return CostFunction::piecewise_linear(get("origin", Rat(0)), rat_list(require("slopes"), "slopes"),
                                              rat_list(require("breakpoints"), "breakpoints"), cls);
    }
    if (kind == "sqrt") {
        reject_unknown_keys(params, {"c"}, "sqrt params");
        return CostFunction::sqrt(get("c", Rat(1)), cls);
    }
    if (kind == "table") {
        reject_unknown_keys(params, {"values"}, "table params");
        const json& values = require("values");
        if (!values.is_array()) throw InputError("table values must be an array");
        std::map<Rat, Rat> table;
        for (const auto& row : values) {
            if (!row.is_array() || row.size() != 2) throw InputError("table rows must be [x, y] pairs");
            table[rat_from_json(row[0])] = rat_from_json(row[1]);
        }
        return CostFunction::table(std::move(table), cls);
    }
    throw InputError("unknown cost kind \"" + kind + "\"");
}

json instance_to_json(const Instance& inst) {
    json intervals = json::array();
    for (const auto& iv : inst.intervals) {
        intervals.push_back(json{{"start", rat_to_json(iv.start())}, {"end", rat_to_json(iv.end())}});
    }
    json out{{"intervals", intervals}, {"cost", cost_function_to_json(inst.cost)}};
    if (inst.threshold) out["W"] = rat_to_json(*inst.threshold);
    return out;
}

Instance instance_from_json(const json& j) {
    reject_unknown_keys(j, {"intervals", "cost", "W"}, "instance");
    if (!j.contains("intervals") || !j["intervals"].is_array()) {
        throw InputError("instance needs an \"intervals\" array");
    }
    if (!j.contains("cost")) throw InputError("instance needs a \"cost\" object");
    Instance inst;
    for (const auto& e : j["intervals"]) {
        reject_unknown_keys(e, {"start", "end"}, "interval");
        if (!e.contains("start") || !e.contains("end")) throw InputError("interval needs start and end");
        inst.intervals.emplace_back(rat_from_json(e["start"]), rat_from_json(e["end"]));
    }
    inst.cost = cost_function_from_json(j["cost"]);
    if (j.contains("W")) inst.threshold = rat_from_json(j["W"]);
    return inst;
}

Instance parse_instance(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    return instance_from_json(j);
}

std::string serialize_instance(const Instance& inst) {
    return instance_to_json(inst).dump(2) + "\n";
}

}  // namespace ivo
