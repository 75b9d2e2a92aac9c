#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>
#include <string>

#include "jk/errors.hpp"
#include "jk/rational.hpp"

using jk::Rational;

TEST_CASE("rational canonical form")
{
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational(0, -5).to_string() == "0");
    CHECK(Rational(0).denominator() == 1);
    CHECK(Rational(7).to_string() == "7");
    CHECK_THROWS_AS(Rational(1, 0), jk::AlgebraError);
}

TEST_CASE("rational parse")
{
    CHECK(Rational::parse("-12/8") == Rational(-3, 2));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
    CHECK_THROWS_AS(Rational::parse("1/-2"), jk::UsageError);
    CHECK_THROWS_AS(Rational::parse("x"), jk::UsageError);
    CHECK_THROWS_AS(Rational::parse("3/0"), jk::AlgebraError);
}

TEST_CASE("overflow spills to big integers and comes back")
{
    const long long big = std::numeric_limits<long long>::max();
    Rational a(big);
    Rational b = a * a;
    CHECK(b.to_string() == "85070591730234615847396907784232501249");
    CHECK(b / a == a);
    Rational m(std::numeric_limits<long long>::min());
    CHECK((-m).to_string() == "9223372036854775808");
    CHECK(-(-m) == m);
    CHECK((b - b).is_zero());
    Rational h = Rational(1, big) + Rational(1, big - 1);
    CHECK(h - Rational(1, big - 1) == Rational(1, big));
}

TEST_CASE("field axioms on random values match GMP")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> dist(-(1LL << 40), 1LL << 40);
    for (int i = 0; i < 500; ++i) {
        long long a = dist(rng), b = dist(rng) | 1, c = dist(rng), d = dist(rng) | 1;
        Rational x(a, b), y(c, d);
        mpq_class X(std::to_string(a) + "/" + std::to_string(b)), Y(std::to_string(c) + "/" + std::to_string(d));
        X.canonicalize();
        Y.canonicalize();
        CHECK((x + y).to_mpq() == X + Y);
        CHECK((x - y).to_mpq() == X - Y);
        CHECK((x * y).to_mpq() == X * Y);
        if (!y.is_zero()) CHECK((x / y).to_mpq() == X / Y);
        CHECK(((x <=> y) < 0) == (X < Y));
    }
}
