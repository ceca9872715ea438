#pragma once

// Instance JSON format:
//
//   {
//     "intervals": [{"start": [num, den], "end": [num, den]}, ...],
//     "cost": {"kind": "pow2", "params": {...}, "class": "arbitrary" | "sub" | "super"},
//     "W": [num, den]                                   (optional)
//   }
//
// A rational is [num, den] with den > 0, or a plain integer. Integers that do
// not fit in 64 bits are written as decimal strings. Unknown keys are
// rejected everywhere.
//
// Cost params by kind:
//   pow2              {}
//   linear            {"c": r, "b": r}                  f(x) = c x + b
//   polynomial        {"coeffs": [r0, r1, ...]}         f(x) = sum r_i x^i
//   piecewise_linear  {"origin": r, "slopes": [...], "breakpoints": [...]}
//   sqrt              {"c": r}                          f(x) = c sqrt(x)
//   table             {"values": [[x, y], ...]}

#include <string>
#include <string_view>

#include "json.hpp"

#include "ivo/instance.hpp"

namespace ivo {

nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json cost_function_to_json(const CostFunction& f);
CostFunction cost_function_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

/// Throws InputError on syntax or schema errors.
Instance parse_instance(std::string_view text);
/// Pretty-printed with a trailing newline; byte-stable for equal instances.
std::string serialize_instance(const Instance& inst);

}  // namespace ivo
