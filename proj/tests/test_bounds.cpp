#include <doctest.h>

#include "hurwitz/bounds.hpp"
#include "hurwitz/chow.hpp"
#include "oracles.hpp"

using hurwitz::Rational;

TEST_CASE("closed-form source top Chern number: spot values")
{
    CHECK(hurwitz::top_chern_source(4, 4, 3) == Rational(920));
    CHECK(hurwitz::top_chern_source(4, 1, 1) == Rational(0));
    CHECK(hurwitz::top_chern_source(4, 3, 1) == Rational(30));
    CHECK(hurwitz::top_chern_source(4, 5, 3) == Rational(1580));
    CHECK(hurwitz::top_chern_source(4, 14, 4) == Rational(56980));
    CHECK(hurwitz::top_chern_source(4, 12, 3) == Rational(25800));
}

TEST_CASE("closed form agrees with three independent expansions")
{
    for (int n = 2; n <= 9; ++n) {
        for (int d = 1; d <= 15; ++d) {
            for (int m = 1; m <= 6; ++m) {
                CAPTURE(n);
                CAPTURE(d);
                CAPTURE(m);
                const auto closed = hurwitz::top_chern_source(n, d, m);
                CHECK(closed == oracle::top_chern_double_sum(n, d, m));
                CHECK(closed == oracle::top_chern_phi_sum(n, d, m));
                if (d != 2 * m) {
                    CHECK(closed == oracle::top_chern_telescoped(n, d, m));
                }
            }
        }
    }
}

TEST_CASE("pullback side and morphism degree")
{
    CHECK(hurwitz::top_chern_pullback(4, 4, 3, 3) == Rational(1080));
    CHECK(hurwitz::top_chern_pullback(4, 14, 5, 4) == Rational(60928));
    CHECK(hurwitz::top_chern_pullback(4, 12, 5, 3) == Rational(22032));
    for (int e = 1; e <= 20; ++e) {
        CHECK(hurwitz::top_chern_pullback(4, e, e, 1) == hurwitz::top_chern_source(4, e, 1));
    }
    CHECK(hurwitz::morphism_degree(4, 3, 3, 1) == Rational(1));
    CHECK(hurwitz::morphism_degree(4, 4, 3, 3) == Rational(36));
    CHECK(hurwitz::morphism_degree(4, 24, 5, 7) == Rational::parse("8232/5"));
    CHECK_FALSE(hurwitz::morphism_degree(4, 24, 5, 7).is_integer());
}

TEST_CASE("property: pullback factors through the identity-shape source number")
{
    for (int n = 4; n <= 9; ++n) {
        for (int d = 1; d <= 25; ++d) {
            for (int e = 1; e <= 12; ++e) {
                for (int m = 1; m <= 6; ++m) {
                    const auto deg_f = hurwitz::morphism_degree(n, d, e, m);
                    CHECK(hurwitz::top_chern_pullback(n, d, e, m) == deg_f * hurwitz::top_chern_source(n, e, 1));
                    CHECK(hurwitz::top_chern_pullback(n, d, e, m)
                          == hurwitz::twisted_top_chern(hurwitz::hypersurface(n, e), 2) * deg_f);
                }
            }
        }
    }
}

TEST_CASE("hurwitz check")
{
    const auto a = hurwitz::hurwitz_check(4, 4, 3, 3);
    CHECK_FALSE(a.holds);
    CHECK(a.lhs == Rational(920));
    CHECK(a.rhs == Rational(1080));
    const auto b = hurwitz::hurwitz_check(4, 5, 3, 3);
    CHECK(b.holds);
    CHECK(b.lhs == Rational(1580));
    CHECK(b.rhs == Rational(1350));
    for (int e = 3; e <= 20; ++e) {
        const auto s = hurwitz::hurwitz_check(4, e, e, 1);
        CHECK(s.holds);
        CHECK(s.lhs == s.rhs);
    }
    const auto c = hurwitz::hurwitz_check(4, 24, 5, 7);
    CHECK(c.lhs == Rational(579984));
    CHECK(c.rhs == Rational(559776));
    CHECK_THROWS_AS(hurwitz::hurwitz_check(3, 4, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(hurwitz::hurwitz_check(4, 4, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(hurwitz::hurwitz_check(4, 0, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(hurwitz::hurwitz_check(4, 4, 3, 0), std::invalid_argument);
}

TEST_CASE("relaxed bound")
{
    const auto s = hurwitz::relaxed_sides(4, 4, 3, 3);
    CHECK(s.lhs == Rational(15));
    CHECK(s.rhs == Rational(9));
    CHECK(s.holds);
    CHECK_FALSE(hurwitz::hurwitz_check(4, 4, 3, 3).holds);
    // Left side tends to 2^(n-1) = 8 from above; (e-1)^3 + 1 = 9 > 8.
    for (int m = 1; m <= 200; m += 7) {
        CHECK(hurwitz::relaxed_sides(4, 1, 3, m).lhs == Rational(8));
    }
    CHECK_FALSE(hurwitz::relaxed_holds(4, 100, 3, 10000));
}

TEST_CASE("relaxed left side is non-increasing in m")
{
    for (int n = 4; n <= 7; ++n) {
        for (int d = 1; d <= 30; ++d) {
            for (int m = 1; m < 40; ++m) {
                CHECK(hurwitz::relaxed_sides(n, d, 3, m + 1).lhs <= hurwitz::relaxed_sides(n, d, 3, m).lhs);
            }
        }
    }
}

TEST_CASE("maximal polynomial degree with certificate")
{
    const auto a = hurwitz::max_poly_degree(4, 3, 3);
    CHECK(a.max_degree == 1);
    CHECK(a.max_degree < a.threshold);
    CHECK(hurwitz::hurwitz_check(4, 3, 3, 2).lhs == Rational(150));
    CHECK(hurwitz::hurwitz_check(4, 3, 3, 2).rhs == Rational(240));

    const auto b = hurwitz::max_poly_degree(4, 1, 5);
    CHECK(b.max_degree == 0);
    CHECK(b.threshold == 1);
    CHECK(hurwitz::hurwitz_check(4, 1, 5, 1).rhs == Rational(68));

    const auto c = hurwitz::max_poly_degree(4, 24, 5);
    CHECK(c.max_degree == 7);
    CHECK(c.threshold == 8);
    for (int m = c.max_degree + 1; m <= 4 * c.max_degree + 4; ++m) {
        CHECK_FALSE(hurwitz::hurwitz_check(4, 24, 5, m).holds);
    }
    CHECK(hurwitz::max_poly_degree(4, 11, 4).max_degree == 4);
}

TEST_CASE("asymptotic condition, separability threshold")
{
    for (int e = 1; e <= 10; ++e) {
        CHECK(hurwitz::asymptotic_necessary(e, e, 1));
        CHECK(hurwitz::asymptotic_necessary(2 * e, e, 2));
    }
    CHECK_FALSE(hurwitz::asymptotic_necessary(24, 5, 7));

    CHECK(hurwitz::separability_threshold(4, 15, 5, 3) == Rational(0));
    CHECK(hurwitz::separability_threshold(7, 12, 4, 3) == Rational(0));
    CHECK(hurwitz::separability_threshold(4, 4, 3, 3) == Rational(15));
    CHECK(hurwitz::separability_threshold(4, 24, 5, 7) == Rational::parse("539/5"));
    CHECK_THROWS_AS(hurwitz::separability_threshold(4, 10, 3, 3), std::invalid_argument);
}
