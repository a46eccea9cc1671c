#include "hurwitz/numerics.hpp"

#include <stdexcept>

namespace hurwitz {

Rational phi(unsigned N, const Rational& x, const Rational& y)
{
    // acc_j = acc_(j-1) * x + y^j
    Rational acc(1);
    Rational y_power(1);
    for (unsigned j = 1; j <= N; ++j) {
        y_power *= y;
        acc = acc * x + y_power;
    }
    return acc;
}

std::size_t descartes_sign_changes(std::span<const Rational> coefficients)
{
    std::size_t changes = 0;
    int previous = 0;
    for (const auto& c : coefficients) {
        const int s = c.sign();
        if (s == 0) {
            continue;
        }
        if (previous != 0 && s != previous) {
            ++changes;
        }
        previous = s;
    }
    return changes;
}

Rational evaluate(std::span<const Rational> coefficients, const Rational& x)
{
    Rational acc;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer out;
    if (k > n) {
        return out;
    }
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Rational phi_gap(unsigned N, const Rational& x)
{
    if (N < 1) {
        throw std::invalid_argument("phi_gap requires N >= 1");
    }
    return (x + 1).pow(N) + 1 - phi(N, x, 2);
}

SignedCoefficientList phi_gap_coefficients(unsigned N)
{
    if (N < 1) {
        throw std::invalid_argument("phi_gap_coefficients requires N >= 1");
    }
    // phi(N, x, 2) = sum_i 2^(N-i) x^i.
    SignedCoefficientList coeffs(N + 1);
    Integer two_power(1);
    for (unsigned i = N + 1; i-- > 0;) {
        coeffs[i] = Rational(binomial(N, i)) - Rational(two_power);
        two_power *= 2;
    }
    coeffs[0] += 1;
    return coeffs;
}

}  // namespace hurwitz
