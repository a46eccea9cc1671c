#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hurwitz {

using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Construction from a numerator/denominator pair canonicalizes
/// immediately, so equality is structural.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

    Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

    /// Throws std::domain_error if `denominator` is zero.
    Rational(const Integer& numerator, const Integer& denominator);

    /// Parses "p" or "p/q" (optional leading '-', decimal digits only) and
    /// canonicalizes. Throws std::invalid_argument on malformed input and
    /// std::domain_error on a zero denominator.
    static Rational parse(std::string_view text);

    /// Canonical rendering: "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string str() const;

    [[nodiscard]] Integer numerator() const { return value_.get_num(); }
    [[nodiscard]] Integer denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }

    [[nodiscard]] Rational pow(unsigned exponent) const;
    [[nodiscard]] Rational abs() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
    {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    [[nodiscard]] std::size_t hash() const;

private:
    mpq_class value_;
};

}  // namespace hurwitz

template <>
struct std::hash<hurwitz::Rational> {
    std::size_t operator()(const hurwitz::Rational& r) const noexcept { return r.hash(); }
};
