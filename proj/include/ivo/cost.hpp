#pragma once

// Cost functions f : [0, inf) -> R and the values they produce.
//
// A Cost lives in one of two backends: exact rationals, or an MPFR float
// with a 133-bit mantissa for functions that are irrational at rational
// arguments (2^x at non-integer x, sqrt). Mixing backends in one
// arithmetic operation is a logic error.

#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "ivo/rational.hpp"

namespace ivo {

using Extended = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<40>,
                                               boost::multiprecision::et_off>;

enum class CostBackend { exact, extended };

std::string to_string(CostBackend backend);

class Cost {
public:
    Cost() : value_(Rat{}) {}
    Cost(Rat exact) : value_(std::move(exact)) {}
    Cost(Extended approx) : value_(std::move(approx)) {}

    static Cost zero(CostBackend backend);

    CostBackend backend() const {
        return value_.index() == 0 ? CostBackend::exact : CostBackend::extended;
    }
    const Rat& exact() const;
    const Extended& approx() const;

    /// Converts to `backend`; exact -> extended rounds, the reverse is a logic error.
    Cost in(CostBackend backend) const;
    double to_double() const;
    std::string to_string() const;

    Cost& operator+=(const Cost& other);
    friend Cost operator+(Cost a, const Cost& b) { return a += b; }
    /// `this` added to itself `times` times.
    Cost scaled(long long times) const;

    friend bool operator==(const Cost& a, const Cost& b);
    friend bool operator<(const Cost& a, const Cost& b);
    friend bool operator<=(const Cost& a, const Cost& b) { return !(b < a); }
    friend bool operator>(const Cost& a, const Cost& b) { return b < a; }

private:
    std::variant<Rat, Extended> value_;
};

std::ostream& operator<<(std::ostream& os, const Cost& c);

/// Relative agreement used by tests on the extended backend: exact equality
/// for exact costs, |a-b| <= rel * max(1, |a|, |b|) otherwise.
bool costs_agree(const Cost& a, const Cost& b, double rel = 1e-9);

enum class CostKind { pow2, linear, polynomial, piecewise_linear, sqrt, table };

/// Declared shape of f - f(0); supplied by the user, never inferred.
enum class FunctionClass { arbitrary, sub_shifted, super_shifted };

std::string to_string(CostKind kind);
std::string to_string(FunctionClass cls);

namespace costs {

struct Pow2 {
    friend bool operator==(const Pow2&, const Pow2&) = default;
};

/// slope * x + intercept
struct Linear {
    Rat slope{1};
    Rat intercept{0};

    friend bool operator==(const Linear&, const Linear&) = default;
};

/// sum_i coeffs[i] * x^i
struct Polynomial {
    std::vector<Rat> coeffs;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Continuous, with value `origin` at 0 and slopes[i] on the i-th piece;
/// breakpoints are strictly increasing and positive, slopes.size() ==
/// breakpoints.size() + 1.
struct PiecewiseLinear {
    Rat origin{0};
    std::vector<Rat> slopes;
    std::vector<Rat> breakpoints;

    friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;
};

/// scale * sqrt(x)
struct Sqrt {
    Rat scale{1};

    friend bool operator==(const Sqrt&, const Sqrt&) = default;
};

/// Defined only at the listed lengths.
struct Table {
    std::map<Rat, Rat> values;

    friend bool operator==(const Table&, const Table&) = default;
};

}  // namespace costs

class CostFunction {
public:
    using Params = std::variant<costs::Pow2, costs::Linear, costs::Polynomial,
                                costs::PiecewiseLinear, costs::Sqrt, costs::Table>;

    CostFunction() = default;
    /// Validates parameters; throws InputError on malformed ones.
    CostFunction(Params params, FunctionClass declared = FunctionClass::arbitrary);

    static CostFunction pow2(FunctionClass declared = FunctionClass::arbitrary);
    static CostFunction linear(Rat slope, Rat intercept,
                               FunctionClass declared = FunctionClass::arbitrary);
    static CostFunction polynomial(std::vector<Rat> coeffs,
                                   FunctionClass declared = FunctionClass::arbitrary);
    static CostFunction piecewise_linear(Rat origin, std::vector<Rat> slopes,
                                         std::vector<Rat> breakpoints,
                                         FunctionClass declared = FunctionClass::arbitrary);
    static CostFunction sqrt(Rat scale = Rat{1}, FunctionClass declared = FunctionClass::arbitrary);
    static CostFunction table(std::map<Rat, Rat> values,
                              FunctionClass declared = FunctionClass::arbitrary);

    CostKind kind() const { return static_cast<CostKind>(params_.index()); }
    const Params& params() const { return params_; }
    FunctionClass declared_class() const { return declared_; }
    CostFunction with_class(FunctionClass declared) const;

    /// Backend used for f(x) when nothing forces the extended one.
    CostBackend natural_backend(const Rat& x) const;

    friend bool operator==(const CostFunction& a, const CostFunction& b);

private:
    Params params_{costs::Pow2{}};
    FunctionClass declared_ = FunctionClass::arbitrary;
};

/// f(x) in `backend`. Throws UndefinedLength for a table at an unlisted x,
/// std::logic_error when an irrational value is requested in the exact backend.
Cost eval_cost(const CostFunction& f, const Rat& x, CostBackend backend);
/// f(x) in its natural backend for x.
Cost eval_cost(const CostFunction& f, const Rat& x);

}  // namespace ivo
