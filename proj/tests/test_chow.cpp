#include <doctest.h>

#include <random>

#include "hurwitz/chow.hpp"
#include "oracles.hpp"

using hurwitz::ChowClass;
using hurwitz::CompleteIntersection;
using hurwitz::Rational;

namespace {

std::vector<Rational> coeffs_of(const ChowClass& c)
{
    return {c.coefficients().begin(), c.coefficients().end()};
}

ChowClass random_class(const CompleteIntersection& space, std::mt19937& rng, bool unit)
{
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> c(static_cast<std::size_t>(space.dimension()) + 1);
    for (auto& v : c) {
        v = Rational(hurwitz::Integer(num(rng)), hurwitz::Integer(den(rng)));
    }
    if (unit && c[0].is_zero()) {
        c[0] = 1;
    }
    return {space, c};
}

}  // namespace

TEST_CASE("complete intersection validation")
{
    CHECK_NOTHROW(CompleteIntersection{4, {4}}.validate());
    CHECK_NOTHROW(CompleteIntersection{2, {1}}.validate());
    CHECK_THROWS_AS(CompleteIntersection({1, {1}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CompleteIntersection({4, {}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CompleteIntersection({3, {2, 2, 2}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CompleteIntersection({4, {0}}).validate(), std::invalid_argument);
    CHECK(CompleteIntersection{6, {2, 3, 4}}.degree() == 24);
    CHECK(CompleteIntersection{6, {2, 3, 4}}.dimension() == 3);
    CHECK_THROWS_AS(ChowClass(CompleteIntersection{4, {4}}, {1, 2}), std::invalid_argument);
}

TEST_CASE("series inverse")
{
    const auto x4 = hurwitz::hypersurface(5, 4);  // dim 4
    const auto p3 = hurwitz::hypersurface(4, 4);  // dim 3
    CHECK(hurwitz::series_inverse(ChowClass::one(p3)) == ChowClass::one(p3));
    const auto inv = hurwitz::series_inverse(ChowClass::linear_power(p3, -4, 1));
    CHECK(coeffs_of(inv) == std::vector<Rational>{1, 4, 16, 64});
    for (int a = -5; a <= 5; ++a) {
        const auto geo = hurwitz::series_inverse(ChowClass::linear_power(x4, -a, 1));
        for (int i = 0; i <= x4.dimension(); ++i) {
            CHECK(geo[i] == oracle::power(a, i));
        }
    }
    CHECK_THROWS_AS(hurwitz::series_inverse(ChowClass::hyperplane_power(p3, 1)), std::domain_error);
}

TEST_CASE("property: truncated ring laws on random classes")
{
    std::mt19937 rng(11);
    for (int n = 3; n <= 8; ++n) {
        const CompleteIntersection space{n, {2, 3}};
        for (int trial = 0; trial < 40; ++trial) {
            const auto a = random_class(space, rng, true);
            const auto b = random_class(space, rng, false);
            const auto c = random_class(space, rng, false);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            const auto inv = hurwitz::series_inverse(a);
            CHECK(a * inv == ChowClass::one(space));
            CHECK(inv * a == ChowClass::one(space));
        }
    }
}

TEST_CASE("cotangent total Chern class")
{
    CHECK(coeffs_of(hurwitz::cotangent_total_chern({4, {4}})) == std::vector<Rational>{1, -1, 6, 14});
    CHECK(coeffs_of(hurwitz::cotangent_total_chern({4, {1}})) == std::vector<Rational>{1, -4, 6, -4});
    for (int n = 2; n <= 9; ++n) {
        for (int d = 1; d <= 12; ++d) {
            const auto total = hurwitz::cotangent_total_chern(hurwitz::hypersurface(n, d));
            for (int i = 0; i <= n - 1; ++i) {
                CAPTURE(n);
                CAPTURE(d);
                CAPTURE(i);
                CHECK(total[i] == oracle::cotangent_chern_coefficient(n, d, i));
            }
        }
    }
}

TEST_CASE("multidegree constant and linear coefficients")
{
    for (int n = 3; n <= 9; ++n) {
        for (int a = 1; a <= 6; ++a) {
            for (int b = 1; b <= 6; ++b) {
                const auto total = hurwitz::cotangent_total_chern({n, {a, b}});
                CHECK(total[0] == Rational(1));
                CHECK(total[1] == Rational(a + b - n - 1));
            }
        }
    }
}

TEST_CASE("twisted top Chern numbers")
{
    CHECK(hurwitz::twisted_top_chern({4, {4}}, 6) == Rational(920));
    CHECK(hurwitz::twisted_top_chern({4, {1}}, 2) == Rational(0));
    CHECK(hurwitz::twisted_top_chern({4, {3}}, 2) == Rational(30));
    // Untwisted top Chern number of a plane curve of degree d is 2g - 2 = d(d - 3).
    for (int d = 1; d <= 10; ++d) {
        CHECK(hurwitz::twisted_top_chern({2, {d}}, 0) == Rational(d * (d - 3)));
    }
    // Quartic surface (K3): c_2(T) = 24, and the cotangent bundle has the same c_2.
    CHECK(hurwitz::twisted_top_chern({3, {4}}, 0) == Rational(24));
    // Negative twists are accepted.
    CHECK(hurwitz::twisted_top_chern({4, {4}}, -2) == oracle::top_chern_double_sum(4, 4, -1));
}

TEST_CASE("degree map")
{
    const CompleteIntersection quartic{4, {4}};
    CHECK(hurwitz::chow_degree(ChowClass::hyperplane_power(quartic, 3)) == Rational(4));
    CHECK(hurwitz::chow_degree(ChowClass(quartic)) == Rational(0));
    CHECK(hurwitz::chow_degree(Rational(230) * ChowClass::hyperplane_power(quartic, 3)) == Rational(920));
    CHECK(hurwitz::chow_degree(ChowClass::hyperplane_power(quartic, 1)) == Rational(0));
    CHECK(hurwitz::chow_degree(ChowClass::hyperplane_power({6, {2, 3}}, 4)) == Rational(6));
}

TEST_CASE("classes on different spaces do not mix")
{
    CHECK_THROWS_AS(ChowClass::one({4, {4}}) * ChowClass::one({4, {3}}), std::invalid_argument);
}
