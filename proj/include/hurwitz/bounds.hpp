#pragma once

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Closed forms for a morphism f: X_d -> Y_e of hypersurfaces in P^n with
// f^*O_Y(1) = O_X(m) (m is the polynomial degree of f).
//
// Preconditions are checked and reported via std::invalid_argument with a
// message naming the violated bound.

/// deg c_(n-1)(Omega^1_X(2m)) =
///   [d (2m-1) phi_(n-1)(2m-1, d-1) + (d-1)^n + (-1)^(n+1)] / (2m).
/// Requires n >= 2, d >= 1, m >= 1.
Rational top_chern_source(int n, int d, int m);

/// deg f^*c_(n-1)(Omega^1_Y(2)) =
///   (d m^(n-1) / e) [e phi_(n-1)(1, e-1) + (e-1)^n + (-1)^(n+1)] / 2.
/// Requires n >= 2, d, e, m >= 1.
Rational top_chern_pullback(int n, int d, int e, int m);

/// deg f = d m^(n-1) / e. Integrality is not enforced here.
Rational morphism_degree(int n, int d, int e, int m);

struct HurwitzSides {
    Rational lhs;  // top_chern_source
    Rational rhs;  // top_chern_pullback
    bool holds = false;  // lhs >= rhs
};

/// Hurwitz-type necessary condition for a separable f of polynomial degree m.
/// holds == false rules m out. Requires n >= 4, d >= 1, e >= 3, m >= 1.
HurwitzSides hurwitz_check(int n, int d, int e, int m);

struct RelaxedSides {
    Rational lhs;  // phi_(n-1)((d-1)/m, 2)
    Rational rhs;  // (e-1)^(n-1) + 1
    bool holds = false;  // lhs > rhs
};

/// Weaker consequence of the Hurwitz inequality, monotone in m:
/// phi_(n-1)((d-1)/m, 2) > (e-1)^(n-1) + 1.
RelaxedSides relaxed_sides(int n, int d, int e, int m);
bool relaxed_holds(int n, int d, int e, int m);

struct DegreeBound {
    /// Largest m with hurwitz_check(...).holds, or 0 if there is none.
    int max_degree = 0;
    /// Smallest m at which the relaxed bound fails. It fails for every
    /// larger m as well, so no m >= threshold can satisfy the Hurwitz check.
    int threshold = 1;
};

/// Scans m = 1, 2, ... and stops at the first m where the relaxed bound
/// fails. Every m below the threshold is checked individually.
/// Requires n >= 4, d >= 1, e >= 3.
DegreeBound max_poly_degree(int n, int d, int e);

/// Large-n limit of the Hurwitz inequality: d - 1 >= m (e - 1).
bool asymptotic_necessary(int d, int e, int m);

/// alpha = (em - d) m^(n-2) / e. Above this characteristic the residual
/// restriction F|_Sigma is separable. Requires em >= d.
Rational separability_threshold(int n, int d, int e, int m);

}  // namespace hurwitz
