#include "hurwitz/bounds.hpp"

#include <stdexcept>
#include <string>

#include "hurwitz/numerics.hpp"

namespace hurwitz {

namespace {

void require(bool ok, const char* what, int value)
{
    if (!ok) {
        throw std::invalid_argument(std::string("precondition violated: ") + what + " (got " + std::to_string(value)
                                    + ")");
    }
}

Rational sign_term(int n)
{
    // (-1)^(n+1)
    return (n % 2 == 0) ? Rational(-1) : Rational(1);
}

}  // namespace

Rational top_chern_source(int n, int d, int m)
{
    require(n >= 2, "n >= 2", n);
    require(d >= 1, "d >= 1", d);
    require(m >= 1, "m >= 1", m);
    const Rational x(2 * m - 1);
    const Rational y(d - 1);
    const auto N = static_cast<unsigned>(n);
    const Rational numerator = Rational(d) * x * phi(N - 1, x, y) + y.pow(N) + sign_term(n);
    return numerator / Rational(2 * m);
}

Rational morphism_degree(int n, int d, int e, int m)
{
    require(n >= 2, "n >= 2", n);
    require(d >= 1, "d >= 1", d);
    require(e >= 1, "e >= 1", e);
    require(m >= 1, "m >= 1", m);
    return Rational(d) * Rational(m).pow(static_cast<unsigned>(n - 1)) / Rational(e);
}

Rational top_chern_pullback(int n, int d, int e, int m)
{
    const Rational deg_f = morphism_degree(n, d, e, m);
    const auto N = static_cast<unsigned>(n);
    const Rational bracket = Rational(e) * phi(N - 1, 1, e - 1) + Rational(e - 1).pow(N) + sign_term(n);
    return deg_f * bracket / Rational(2);
}

HurwitzSides hurwitz_check(int n, int d, int e, int m)
{
    require(n >= 4, "n >= 4", n);
    require(e >= 3, "e >= 3", e);
    HurwitzSides out{top_chern_source(n, d, m), top_chern_pullback(n, d, e, m)};
    out.holds = out.lhs >= out.rhs;
    return out;
}

RelaxedSides relaxed_sides(int n, int d, int e, int m)
{
    require(n >= 4, "n >= 4", n);
    require(d >= 1, "d >= 1", d);
    require(e >= 3, "e >= 3", e);
    require(m >= 1, "m >= 1", m);
    const auto N = static_cast<unsigned>(n);
    RelaxedSides out{phi(N - 1, Rational(d - 1) / Rational(m), 2), Rational(e - 1).pow(N - 1) + 1};
    out.holds = out.lhs > out.rhs;
    return out;
}

bool relaxed_holds(int n, int d, int e, int m)
{
    return relaxed_sides(n, d, e, m).holds;
}

DegreeBound max_poly_degree(int n, int d, int e)
{
    require(n >= 4, "n >= 4", n);
    require(d >= 1, "d >= 1", d);
    require(e >= 3, "e >= 3", e);
    // The relaxed left side decreases to 2^(n-1) < (e-1)^(n-1) + 1 as m grows,
    // so the loop terminates.
    DegreeBound out;
    for (int m = 1;; ++m) {
        if (!relaxed_holds(n, d, e, m)) {
            out.threshold = m;
            return out;
        }
        if (hurwitz_check(n, d, e, m).holds) {
            out.max_degree = m;
        }
    }
}

bool asymptotic_necessary(int d, int e, int m)
{
    require(d >= 1, "d >= 1", d);
    require(e >= 1, "e >= 1", e);
    require(m >= 1, "m >= 1", m);
    return d - 1 >= m * (e - 1);
}

Rational separability_threshold(int n, int d, int e, int m)
{
    require(n >= 4, "n >= 4", n);
    require(e >= 1, "e >= 1", e);
    require(m >= 1, "m >= 1", m);
    require(e * m >= d, "em - d >= 0", e * m - d);
    return Rational(e * m - d) * Rational(m).pow(static_cast<unsigned>(n - 2)) / Rational(e);
}

}  // namespace hurwitz
