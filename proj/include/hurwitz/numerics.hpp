#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Dense univariate polynomial; index i holds the coefficient of x^i.
/// Trailing zeros are allowed and carry no meaning.
using SignedCoefficientList = std::vector<Rational>;

/// Complete homogeneous sum x^N + x^(N-1) y + ... + x y^(N-1) + y^N.
Rational phi(unsigned N, const Rational& x, const Rational& y);

/// Number of sign changes in the nonzero coefficients, read from x^0 upward.
std::size_t descartes_sign_changes(std::span<const Rational> coefficients);

/// Horner evaluation.
Rational evaluate(std::span<const Rational> coefficients, const Rational& x);

/// Binomial coefficient C(n, k); zero when k > n.
Integer binomial(unsigned n, unsigned k);

// (x+1)^N + 1 - phi(N, x, 2): the gap between the shifted binomial and
// phi(., 2). It has exactly one positive root, which lies at or below 3 for
// N >= 3, so phi(N, y, 2) > (x+1)^N + 1 with x >= 3 forces y > x.

/// Exact value of (x+1)^N + 1 - phi(N, x, 2). Requires N >= 1.
Rational phi_gap(unsigned N, const Rational& x);

/// Coefficients of (x+1)^N + 1 - phi(N, x, 2) in x, length N + 1.
SignedCoefficientList phi_gap_coefficients(unsigned N);

}  // namespace hurwitz
