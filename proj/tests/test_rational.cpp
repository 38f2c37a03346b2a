#include "tmm/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace tmm;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rational(20, 8) == Rational(5, 2));
    CHECK(Rational(20, 8).num() == 5);
    CHECK(Rational(20, 8).den() == 2);
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("comparison is exact cross-multiplication") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(10, 3) > Rational(3));
    CHECK(Rational(40, 13) > Rational(3));
    CHECK(Rational(40, 13) < Rational(10, 3));
    CHECK(Rational(2, 1) == Rational(2));
    CHECK(Rational(5, 2) >= Rational(5, 2));
    CHECK(Rational(5, 2) <= Rational(5, 2));
    // values far beyond 64-bit cross products
    const BigInt huge = BigInt(1) << 100;
    CHECK(Rational(huge + 1, huge) > Rational(1));
    CHECK(Rational(huge, huge + 1) < Rational(1));
    CHECK(Rational(2 * huge, huge) == Rational(2));
}

TEST_CASE("ceil") {
    CHECK(Rational(5, 2).ceil() == 3);
    CHECK(Rational(2).ceil() == 2);
    CHECK(Rational(40, 13).ceil() == 4);
    CHECK(Rational(0).ceil() == 0);
    CHECK(Rational(-5, 2).ceil() == -2);
    CHECK(Rational(1, 1000).ceil() == 1);
}

TEST_CASE("string forms") {
    CHECK(Rational(5, 2).str() == "5/2");
    CHECK(Rational(2).str() == "2/1");
    CHECK(Rational(2).pretty() == "2");
    CHECK(Rational(5, 2).pretty() == "5/2");
    CHECK(Rational::parse("5/2") == Rational(5, 2));
    CHECK(Rational::parse("2") == Rational(2));
    CHECK(Rational::parse("640/193") == Rational(640, 193));
}

TEST_CASE("decimal rendering rounds half away from zero") {
    CHECK(Rational(5, 2).decimal(6) == "2.500000");
    CHECK(Rational(40, 13).decimal(6) == "3.076923");
    CHECK(Rational(1, 3).decimal(6) == "0.333333");
    CHECK(Rational(2, 3).decimal(6) == "0.666667");
    CHECK(Rational(1, 2).decimal(0) == "1");
    CHECK(Rational(-5, 2).decimal(1) == "-2.5");
}
