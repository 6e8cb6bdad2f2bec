#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bernlab/combinatorics.hpp"
#include "bernlab/rational.hpp"

#include <cmath>
#include <sstream>

using namespace bernlab;

TEST_CASE("construction normalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -7).denominator() == 1);
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(42).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("canonical form keeps the sign in the numerator") {
    const Rational r(5, -15);
    CHECK(r.numerator() == -1);
    CHECK(r.denominator() == 3);
    CHECK(r.sign() == -1);
    CHECK(Rational(7, 3).sign() == 1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("arithmetic") {
    const Rational a(1, 6), b(-1, 30);
    CHECK(a + b == Rational(2, 15));
    CHECK(a - b == Rational(1, 5));
    CHECK(a * b == Rational(-1, 180));
    CHECK(a / b == Rational(-5));
    CHECK(-a == Rational(-1, 6));
    CHECK(a + (-a) == Rational(0));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);

    Rational c(3, 4);
    c += Rational(1, 4);
    CHECK(c == Rational(1));
    c *= Rational(2, 3);
    CHECK(c == Rational(2, 3));
    c /= Rational(2, 3);
    CHECK(c == Rational(1));
    c -= Rational(1);
    CHECK(c.is_zero());
}

TEST_CASE("ordering by cross multiplication") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 2) > Rational(10, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(2, 4) >= Rational(1, 2));
    CHECK(abs(Rational(-5, 66)) == Rational(5, 66));
}

TEST_CASE("reciprocal and pow") {
    CHECK(Rational(-2, 3).reciprocal() == Rational(-3, 2));
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
    CHECK(pow(Rational(-1, 2), 0) == Rational(1));
    CHECK(pow(Rational(-1, 2), 3) == Rational(-1, 8));
    CHECK(pow(Rational(2, 3), 10) == Rational(1024, 59049));
}

TEST_CASE("string round trip") {
    CHECK(Rational(-691, 2730).str() == "-691/2730");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational::parse("-691/2730") == Rational(-691, 2730));
    CHECK(Rational::parse("+3/9") == Rational(1, 3));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);

    std::ostringstream os;
    os << Rational(-1, 30);
    CHECK(os.str() == "-1/30");
}

TEST_CASE("big integer support") {
    const BigInt big = factorial(30);
    const Rational r(BigInt(1), big);
    CHECK((r * Rational(big)).is_integer());
    CHECK(Rational(big) + Rational(1) - Rational(big) == Rational(1));

    const Rational huge(factorial(40), factorial(20));
    CHECK(huge.denominator() == 1);
    CHECK(Rational::parse(huge.str()) == huge);
}

TEST_CASE("float conversion") {
    CHECK(Rational(1, 3).to_ld() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(Rational(-5, 66).to_ld() == doctest::Approx(-5.0 / 66.0).epsilon(1e-15));
    const long double big = to_long_double(factorial(25));
    CHECK(std::abs(big / 1.5511210043330986e25L - 1.0L) < 1e-15L);
    CHECK(to_long_double(BigInt(-12)) == -12.0L);
    CHECK(std::abs(log_big(factorial(100)) / 363.73937555556349L - 1.0L) < 1e-12L);
}
