#include "ivo/cost.hpp"

#include <algorithm>
#include <ostream>

#include "ivo/errors.hpp"

namespace ivo {

namespace {

Extended to_extended(const Rat& r) {
    Extended out;
    mpfr_set_q(out.backend().data(), r.value().get_mpq_t(), MPFR_RNDN);
    return out;
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string to_string(CostBackend backend) {
    return backend == CostBackend::exact ? "exact" : "extended";
}

Cost Cost::zero(CostBackend backend) {
    if (backend == CostBackend::exact) return Cost(Rat{});
    return Cost(Extended(0));
}

const Rat& Cost::exact() const {
    if (const auto* r = std::get_if<Rat>(&value_)) return *r;
    throw std::logic_error("cost is not in the exact backend");
}

const Extended& Cost::approx() const {
    if (const auto* x = std::get_if<Extended>(&value_)) return *x;
    throw std::logic_error("cost is not in the extended backend");
}

Cost Cost::in(CostBackend target) const {
    if (backend() == target) return *this;
    if (target == CostBackend::extended) return Cost(to_extended(exact()));
    throw std::logic_error("cannot convert an extended cost to the exact backend");
}

double Cost::to_double() const {
    if (backend() == CostBackend::exact) return exact().to_double();
    return approx().convert_to<double>();
}

std::string Cost::to_string() const {
    if (backend() == CostBackend::exact) return exact().to_string();
    return approx().str(30);
}

Cost& Cost::operator+=(const Cost& other) {
    if (backend() != other.backend()) throw std::logic_error("mixed cost backends in addition");
    if (auto* r = std::get_if<Rat>(&value_)) {
        *r += other.exact();
    } else {
        std::get<Extended>(value_) += other.approx();
    }
    return *this;
}

Cost Cost::scaled(long long times) const {
    if (backend() == CostBackend::exact) return Cost(exact() * Rat(times));
    return Cost(Extended(approx() * times));
}

bool operator==(const Cost& a, const Cost& b) {
    if (a.backend() != b.backend()) throw std::logic_error("mixed cost backends in comparison");
    if (a.backend() == CostBackend::exact) return a.exact() == b.exact();
    return a.approx() == b.approx();
}

bool operator<(const Cost& a, const Cost& b) {
    if (a.backend() != b.backend()) throw std::logic_error("mixed cost backends in comparison");
    if (a.backend() == CostBackend::exact) return a.exact() < b.exact();
    return a.approx() < b.approx();
}

std::ostream& operator<<(std::ostream& os, const Cost& c) {
    return os << c.to_string();
}

bool costs_agree(const Cost& a, const Cost& b, double rel) {
    if (a.backend() == CostBackend::exact && b.backend() == CostBackend::exact) return a == b;
    Extended x = a.in(CostBackend::extended).approx();
    Extended y = b.in(CostBackend::extended).approx();
    Extended scale = std::max(Extended(1), std::max(Extended(abs(x)), Extended(abs(y))));
    return abs(x - y) <= Extended(rel) * scale;
}

std::string to_string(CostKind kind) {
    switch (kind) {
        case CostKind::pow2: return "pow2";
        case CostKind::linear: return "linear";
        case CostKind::polynomial: return "polynomial";
        case CostKind::piecewise_linear: return "piecewise_linear";
        case CostKind::sqrt: return "sqrt";
        case CostKind::table: return "table";
    }
    return "?";
}

std::string to_string(FunctionClass cls) {
    switch (cls) {
        case FunctionClass::arbitrary: return "arbitrary";
        case FunctionClass::sub_shifted: return "sub";
        case FunctionClass::super_shifted: return "super";
    }
    return "?";
}

CostFunction::CostFunction(Params params, FunctionClass declared)
    : params_(std::move(params)), declared_(declared) {
    if (const auto* pw = std::get_if<costs::PiecewiseLinear>(&params_)) {
        if (pw->slopes.size() != pw->breakpoints.size() + 1) {
            throw InputError("piecewise_linear needs exactly one more slope than breakpoints");
        }
        for (std::size_t i = 0; i < pw->breakpoints.size(); ++i) {
            if (pw->breakpoints[i].sign() <= 0) throw InputError("piecewise_linear breakpoints must be positive");
            if (i > 0 && !(pw->breakpoints[i - 1] < pw->breakpoints[i])) {
                throw InputError("piecewise_linear breakpoints must be strictly increasing");
            }
        }
    } else if (const auto* tab = std::get_if<costs::Table>(&params_)) {
        for (const auto& [x, y] : tab->values) {
            if (x.sign() < 0) throw InputError("table lengths must be non-negative");
        }
    }
}

CostFunction CostFunction::pow2(FunctionClass declared) {
    return CostFunction(costs::Pow2{}, declared);
}

CostFunction CostFunction::linear(Rat slope, Rat intercept, FunctionClass declared) {
    return CostFunction(costs::Linear{std::move(slope), std::move(intercept)}, declared);
}

CostFunction CostFunction::polynomial(std::vector<Rat> coeffs, FunctionClass declared) {
    return CostFunction(costs::Polynomial{std::move(coeffs)}, declared);
}

CostFunction CostFunction::piecewise_linear(Rat origin, std::vector<Rat> slopes,
                                            std::vector<Rat> breakpoints, FunctionClass declared) {
    return CostFunction(costs::PiecewiseLinear{std::move(origin), std::move(slopes), std::move(breakpoints)},
                        declared);
}

CostFunction CostFunction::sqrt(Rat scale, FunctionClass declared) {
    return CostFunction(costs::Sqrt{std::move(scale)}, declared);
}

CostFunction CostFunction::table(std::map<Rat, Rat> values, FunctionClass declared) {
    return CostFunction(costs::Table{std::move(values)}, declared);
}

CostFunction CostFunction::with_class(FunctionClass declared) const {
    CostFunction out = *this;
    out.declared_ = declared;
    return out;
}

CostBackend CostFunction::natural_backend(const Rat& x) const {
    switch (kind()) {
        case CostKind::pow2: return x.is_integer() ? CostBackend::exact : CostBackend::extended;
        case CostKind::sqrt: return CostBackend::extended;
        default: return CostBackend::exact;
    }
}

bool operator==(const CostFunction& a, const CostFunction& b) {
    return a.declared_ == b.declared_ && a.params_ == b.params_;
}

Cost eval_cost(const CostFunction& f, const Rat& x, CostBackend backend) {
    if (x.sign() < 0) throw InputError("cost evaluated at negative length " + x.to_string());
    auto irrational = [&]() -> Cost {
        throw std::logic_error("f(" + x.to_string() + ") is not exact for " + to_string(f.kind()));
    };
    Cost value = std::visit(
        overloaded{
            [&](const costs::Pow2&) -> Cost {
                if (x.is_integer()) {
                    mpz_class p = 1;
                    mpz_class n = x.num();
                    if (!n.fits_ulong_p()) throw InputError("2^x exponent too large");
                    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), n.get_ui());
                    return Cost(Rat(p));
                }
                if (backend == CostBackend::exact) return irrational();
                return Cost(Extended(exp2(to_extended(x))));
            },
            [&](const costs::Linear& p) -> Cost { return Cost(p.slope * x + p.intercept); },
            [&](const costs::Polynomial& p) -> Cost {
                Rat acc;
                for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + *it;
                return Cost(acc);
            },
            [&](const costs::PiecewiseLinear& p) -> Cost {
                Rat acc = p.origin;
                Rat left;
                for (std::size_t i = 0; i < p.slopes.size(); ++i) {
                    Rat right = i < p.breakpoints.size() ? p.breakpoints[i] : x;
                    Rat hi = min(right, x);
                    if (left < hi) acc += p.slopes[i] * (hi - left);
                    if (!(right < x)) break;
                    left = right;
                }
                return Cost(acc);
            },
            [&](const costs::Sqrt& p) -> Cost {
                if (backend == CostBackend::exact) return irrational();
                return Cost(Extended(to_extended(p.scale) * sqrt(to_extended(x))));
            },
            [&](const costs::Table& p) -> Cost {
                auto it = p.values.find(x);
                if (it == p.values.end()) {
                    throw UndefinedLength("table cost function has no value at length " + x.to_string());
                }
                return Cost(it->second);
            },
        },
        f.params());
    return value.in(backend);
}

Cost eval_cost(const CostFunction& f, const Rat& x) {
    return eval_cost(f, x, f.natural_backend(x));
}

}  // namespace ivo
