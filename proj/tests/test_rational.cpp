#include "doctest.h"
#include "pg/rational.hpp"

using pg::Rational;
using pg::frac;

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(frac(5, 4) + frac(3, 4) == Rational(2));
    CHECK(frac(1, 6) * Rational(3) == frac(1, 2));
    CHECK(frac(2, -4) == frac(-1, 2));
    CHECK((frac(5, 6) + frac(2, 3) + frac(1, 2)).str() == "2");
    CHECK(frac(-5, 4).str() == "-5/4");
    CHECK(Rational(0).str() == "0");
    CHECK(frac(1, 12) > Rational(0));
    CHECK(frac(7, 8) * Rational(8) - Rational(7) == Rational(0));
}

TEST_CASE("the charge identities from the face analysis hold exactly") {
    // -3 + 2*(5/4) + 1/2 = 0
    CHECK(Rational(-3) + Rational(2) * frac(5, 4) + frac(1, 2) == Rational(0));
    // -3 + 9/4 + 3/4 = 0
    CHECK(Rational(-3) + frac(9, 4) + frac(3, 4) == Rational(0));
    // -2 + 5/6 + 2/3 + 1/2 = 0
    CHECK(Rational(-2) + frac(5, 6) + frac(2, 3) + frac(1, 2) == Rational(0));
    // -2 + 1 + 2*(1/2) = 0
    CHECK(Rational(-2) + Rational(1) + Rational(2) * frac(1, 2) == Rational(0));
    // 2*6-6 - (9/4)*2 - 7/4 = -1/4
    CHECK(Rational(6) - frac(9, 4) * 2 - frac(7, 4) == frac(-1, 4));
}

TEST_CASE("division and ordering") {
    CHECK(frac(1, 2) / frac(1, 3) == frac(3, 2));
    CHECK(frac(-1, 4) < Rational(0));
    CHECK_THROWS(frac(1, 0));
    CHECK_THROWS(frac(1, 2) / Rational(0));
}
