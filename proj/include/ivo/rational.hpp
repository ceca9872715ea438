#pragma once

// Exact rational numbers backed by GMP.
//
// A Rat is always stored in lowest terms with a positive denominator, so
// structural equality coincides with numeric equality and Rat can be used
// directly as an ordered-container key.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ivo {

class Rat {
public:
    Rat() = default;
    Rat(long long value) : value_(static_cast<long>(value)) {}
    Rat(const mpz_class& num, const mpz_class& den);
    explicit Rat(const mpz_class& integer) : value_(integer) {}
    explicit Rat(const mpq_class& value);

    /// Parses "p", "p/q" or "-p/q" with arbitrary-size integers.
    static Rat parse(std::string_view text);

    const mpq_class& value() const { return value_; }
    mpz_class num() const { return value_.get_num(); }
    mpz_class den() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    /// Integer value; only meaningful when is_integer().
    std::optional<long long> to_int64() const;
    double to_double() const { return value_.get_d(); }

    /// "p/q", or "p" when q == 1.
    std::string to_string() const;

    Rat& operator+=(const Rat& other);
    Rat& operator-=(const Rat& other);
    Rat& operator*=(const Rat& other);
    Rat& operator/=(const Rat& other);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a);

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace ivo
