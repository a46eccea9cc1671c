#include "hurwitz/chow.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "hurwitz/numerics.hpp"

namespace hurwitz {

void CompleteIntersection::validate() const
{
    if (n < 2) {
        throw std::invalid_argument("complete intersection requires n >= 2 (got n = " + std::to_string(n) + ")");
    }
    if (degrees.empty() || codimension() >= n) {
        throw std::invalid_argument("complete intersection requires 1 <= codimension < n");
    }
    for (int a : degrees) {
        if (a < 1) {
            throw std::invalid_argument("complete intersection requires every degree >= 1");
        }
    }
}

Integer CompleteIntersection::degree() const
{
    Integer out(1);
    for (int a : degrees) {
        out *= a;
    }
    return out;
}

CompleteIntersection hypersurface(int n, int d)
{
    CompleteIntersection out{n, {d}};
    out.validate();
    return out;
}

ChowClass::ChowClass(CompleteIntersection space) : space_(std::move(space))
{
    space_.validate();
    coefficients_.resize(static_cast<std::size_t>(space_.dimension()) + 1);
}

ChowClass::ChowClass(CompleteIntersection space, std::vector<Rational> coefficients)
    : space_(std::move(space)), coefficients_(std::move(coefficients))
{
    space_.validate();
    if (coefficients_.size() != static_cast<std::size_t>(space_.dimension()) + 1) {
        throw std::invalid_argument("Chow class needs exactly dim X + 1 coefficients");
    }
}

ChowClass ChowClass::one(const CompleteIntersection& space)
{
    return hyperplane_power(space, 0);
}

ChowClass ChowClass::hyperplane_power(const CompleteIntersection& space, int k)
{
    ChowClass out(space);
    if (k >= 0 && k <= space.dimension()) {
        out.coefficients_[static_cast<std::size_t>(k)] = 1;
    }
    return out;
}

ChowClass ChowClass::linear_power(const CompleteIntersection& space, const Rational& a, unsigned k)
{
    ChowClass out(space);
    Rational a_power(1);
    for (std::size_t i = 0; i < out.coefficients_.size() && i <= k; ++i) {
        out.coefficients_[i] = Rational(binomial(k, static_cast<unsigned>(i))) * a_power;
        a_power *= a;
    }
    return out;
}

void ChowClass::require_same_space(const ChowClass& rhs) const
{
    if (space_ != rhs.space_) {
        throw std::invalid_argument("Chow classes live on different complete intersections");
    }
}

ChowClass& ChowClass::operator+=(const ChowClass& rhs)
{
    require_same_space(rhs);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        coefficients_[i] += rhs.coefficients_[i];
    }
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& rhs)
{
    require_same_space(rhs);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        coefficients_[i] -= rhs.coefficients_[i];
    }
    return *this;
}

ChowClass& ChowClass::operator*=(const ChowClass& rhs)
{
    require_same_space(rhs);
    const std::size_t len = coefficients_.size();
    std::vector<Rational> product(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (coefficients_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j < len; ++j) {
            product[i + j] += coefficients_[i] * rhs.coefficients_[j];
        }
    }
    coefficients_ = std::move(product);
    return *this;
}

ChowClass& ChowClass::operator*=(const Rational& scalar)
{
    for (auto& c : coefficients_) {
        c *= scalar;
    }
    return *this;
}

ChowClass series_inverse(const ChowClass& cls)
{
    const auto c = cls.coefficients();
    if (c[0].is_zero()) {
        throw std::domain_error("series_inverse: constant coefficient is zero (not a unit)");
    }
    std::vector<Rational> inv(c.size());
    const Rational lead_inverse = Rational(1) / c[0];
    inv[0] = lead_inverse;
    for (std::size_t k = 1; k < c.size(); ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j) {
            acc += c[j] * inv[k - j];
        }
        inv[k] = -acc * lead_inverse;
    }
    return {cls.space(), std::move(inv)};
}

Rational chow_degree(const ChowClass& cls)
{
    return cls[cls.top_index()] * Rational(cls.space().degree());
}

ChowClass cotangent_total_chern(const CompleteIntersection& space)
{
    space.validate();
    auto total = ChowClass::linear_power(space, -1, static_cast<unsigned>(space.n + 1));
    for (int a : space.degrees) {
        total *= series_inverse(ChowClass::linear_power(space, -a, 1));
    }
    return total;
}

Rational twisted_top_chern(const CompleteIntersection& space, long t)
{
    const auto chern = cotangent_total_chern(space);
    const int r = space.dimension();
    Rational top;
    for (int i = 0; i <= r; ++i) {
        top += chern[i] * Rational(t).pow(static_cast<unsigned>(r - i));
    }
    return top * Rational(space.degree());
}

}  // namespace hurwitz
