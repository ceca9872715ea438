#include "ivo/rational.hpp"

#include <ostream>

#include "ivo/errors.hpp"

namespace ivo {

namespace {

mpz_class parse_integer(std::string_view text) {
    if (text.empty()) throw InputError("empty integer literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw InputError("malformed integer: " + std::string(text));
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9') {
            throw InputError("malformed integer: " + std::string(text));
        }
    }
    mpz_class z;
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    z.set_str(digits, 10);
    return z;
}

}  // namespace

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rat::Rat(const mpq_class& value) : value_(value) {
    if (value_.get_den() == 0) throw InputError("rational with zero denominator");
    value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_integer(text));
    return Rat(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::optional<long long> Rat::to_int64() const {
    if (!is_integer() || !value_.get_num().fits_slong_p()) return std::nullopt;
    return value_.get_num().get_si();
}

std::string Rat::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat& Rat::operator+=(const Rat& other) {
    value_ += other.value_;
    return *this;
}

Rat& Rat::operator-=(const Rat& other) {
    value_ -= other.value_;
    return *this;
}

Rat& Rat::operator*=(const Rat& other) {
    value_ *= other.value_;
    return *this;
}

Rat& Rat::operator/=(const Rat& other) {
    if (other.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= other.value_;
    return *this;
}

Rat operator-(const Rat& a) {
    return Rat(mpq_class(-a.value_));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
}

}  // namespace ivo
