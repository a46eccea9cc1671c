#include <doctest.h>

#include <random>
#include <stdexcept>
#include <unordered_set>

#include "hurwitz/rational.hpp"

using hurwitz::Integer;
using hurwitz::Rational;

TEST_CASE("rational is stored in lowest terms with a positive denominator")
{
    const Rational r(Integer(6), Integer(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(Integer(10), Integer(5)).str() == "2");
    CHECK(Rational(Integer(0), Integer(-7)).str() == "0");
    CHECK(Rational(Integer(0), Integer(-7)).denominator() == 1);
}

TEST_CASE("zero denominators and division by zero are errors")
{
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("3/0"), std::domain_error);
}

TEST_CASE("parse rejects malformed text")
{
    for (const char* bad : {"", "-", "1/", "/2", "1.5", "+3", "1/-2", " 4", "4 ", "0x10", "1//2"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
    }
    CHECK(Rational::parse("-12/8") == Rational(Integer(-3), Integer(2)));
    CHECK(Rational::parse("000") == Rational(0));
}

TEST_CASE("exact arithmetic and ordering")
{
    const Rational a = Rational::parse("1/3");
    const Rational b = Rational::parse("1/6");
    CHECK(a + b == Rational::parse("1/2"));
    CHECK(a - b == b);
    CHECK(a * b == Rational::parse("1/18"));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational::parse("-1/3"));
    CHECK(b < a);
    CHECK(Rational::parse("-2/3").pow(3) == Rational::parse("-8/27"));
    CHECK(Rational::parse("-2/3").abs() == Rational::parse("2/3"));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(Rational::parse("12345678901234567890123/1").is_integer());
}

TEST_CASE("property: render then parse is the identity on canonical values")
{
    std::mt19937_64 rng(20261018);
    std::uniform_int_distribution<long> num(-1'000'000'000L, 1'000'000'000L);
    std::uniform_int_distribution<long> den(1, 1'000'000L);
    std::unordered_set<Rational> seen;
    for (int i = 0; i < 2000; ++i) {
        Rational r(Integer(num(rng)), Integer(den(rng)));
        r *= Rational(Integer(num(rng))).pow(2);  // push past 64 bits
        const auto text = r.str();
        CAPTURE(text);
        REQUIRE(Rational::parse(text) == r);
        REQUIRE(Rational::parse(text).str() == text);
        seen.insert(r);
        CHECK(seen.count(Rational::parse(text)) == 1);
    }
}
