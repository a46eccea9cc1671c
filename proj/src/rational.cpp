#include "hurwitz/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hurwitz {

namespace {

bool is_decimal(std::string_view digits)
{
    return !digits.empty()
           && std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator)
{
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_.get_num() = numerator;
    value_.get_den() = denominator;
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);

    const bool negative = !num.empty() && num.front() == '-';
    if (negative) {
        num.remove_prefix(1);
    }
    if (!is_decimal(num) || !is_decimal(den)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    Integer n(std::string(num), 10);
    if (negative) {
        n = -n;
    }
    return {n, Integer(std::string(den), 10)};
}

std::string Rational::str() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_str();
}

Rational Rational::pow(unsigned exponent) const
{
    Rational out;
    mpz_pow_ui(out.value_.get_num_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.value_.get_den_mpz_t(), value_.get_den_mpz_t(), exponent);
    // gcd(p^k, q^k) = 1 and q^k > 0 already, so no canonicalize needed.
    return out;
}

Rational Rational::abs() const
{
    Rational out(*this);
    out.value_ = ::abs(value_);
    return out;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational out(*this);
    out.value_ = -value_;
    return out;
}

std::size_t Rational::hash() const
{
    const std::hash<std::string> h;
    return h(str());
}

}  // namespace hurwitz
