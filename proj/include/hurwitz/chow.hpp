#pragma once

#include <span>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// A complete intersection of multidegree (a_1, ..., a_c) in P^n.
/// c = 1 is the hypersurface case.
struct CompleteIntersection {
    int n = 0;
    std::vector<int> degrees;

    /// Throws std::invalid_argument unless n >= 2, 1 <= c < n and all a_i >= 1.
    void validate() const;

    [[nodiscard]] int codimension() const { return static_cast<int>(degrees.size()); }
    [[nodiscard]] int dimension() const { return n - codimension(); }
    /// deg X = product of the a_i; the value of h^dim X under the degree map.
    [[nodiscard]] Integer degree() const;

    friend bool operator==(const CompleteIntersection&, const CompleteIntersection&) = default;
};

CompleteIntersection hypersurface(int n, int d);

/// Class in the Chow ring of X, truncated above h^dim X. Dense: index i is
/// the coefficient of h^i and the length is always dim X + 1.
class ChowClass {
public:
    /// The zero class.
    explicit ChowClass(CompleteIntersection space);
    /// Throws std::invalid_argument if the length is not dim X + 1.
    ChowClass(CompleteIntersection space, std::vector<Rational> coefficients);

    static ChowClass one(const CompleteIntersection& space);
    /// h^k (zero when k > dim X).
    static ChowClass hyperplane_power(const CompleteIntersection& space, int k);
    /// (1 + a h)^k truncated, k >= 0.
    static ChowClass linear_power(const CompleteIntersection& space, const Rational& a, unsigned k);

    [[nodiscard]] const CompleteIntersection& space() const { return space_; }
    [[nodiscard]] std::span<const Rational> coefficients() const { return coefficients_; }
    [[nodiscard]] const Rational& operator[](int i) const { return coefficients_.at(static_cast<std::size_t>(i)); }
    [[nodiscard]] int top_index() const { return space_.dimension(); }

    ChowClass& operator+=(const ChowClass& rhs);
    ChowClass& operator-=(const ChowClass& rhs);
    ChowClass& operator*=(const ChowClass& rhs);
    ChowClass& operator*=(const Rational& scalar);

    friend ChowClass operator+(ChowClass lhs, const ChowClass& rhs) { return lhs += rhs; }
    friend ChowClass operator-(ChowClass lhs, const ChowClass& rhs) { return lhs -= rhs; }
    friend ChowClass operator*(ChowClass lhs, const ChowClass& rhs) { return lhs *= rhs; }
    friend ChowClass operator*(ChowClass lhs, const Rational& s) { return lhs *= s; }
    friend ChowClass operator*(const Rational& s, ChowClass rhs) { return rhs *= s; }

    friend bool operator==(const ChowClass&, const ChowClass&) = default;

private:
    void require_same_space(const ChowClass& rhs) const;

    CompleteIntersection space_;
    std::vector<Rational> coefficients_;
};

/// Truncated multiplicative inverse. Throws std::domain_error when the
/// constant coefficient is zero.
ChowClass series_inverse(const ChowClass& cls);

/// Degree map: top coefficient times deg X. Lower-degree parts are ignored.
Rational chow_degree(const ChowClass& cls);

/// c(Omega^1_X) = (1 - h)^(n+1) / prod_i (1 - a_i h), from the Euler and
/// conormal sequences, truncated at h^(dim X + 1).
ChowClass cotangent_total_chern(const CompleteIntersection& space);

/// deg c_top(Omega^1_X(t)) = deg sum_i c_i(Omega^1_X) (t h)^(r - i), r = dim X.
Rational twisted_top_chern(const CompleteIntersection& space, long t);

}  // namespace hurwitz
