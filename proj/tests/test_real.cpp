#include "doctest.h"

#include "qlag/real.hpp"

using namespace qlag;

TEST_CASE("precision floor and join") {
    CHECK_THROWS_AS(Real(32), domain_error);
    Real a(1L, 128), b(1L, 256);
    CHECK((a + b).prec() == 256);
    CHECK((a * b).prec() == 256);
    CHECK((a - a).prec() == 128);
}

TEST_CASE("exact comparisons and sign") {
    Real a = Real::from_decimal("-0.25", 128);
    CHECK(a.sign() == -1);
    CHECK(a < 0L);
    CHECK(abs(a) == Real::from_decimal("0.25", 128)); // dyadic, exact
    CHECK(Real(0L, 64).sign() == 0);
}

TEST_CASE("decimal parse/print round-trips the value") {
    for (const char* s : {"0.997", "-1.121695", "0.23", "1e-4", "-0.00661085"}) {
        Real v = Real::from_decimal(s, 256);
        Real back = Real::from_decimal(v.to_string(), 256);
        CHECK(v == back);
    }
    CHECK_THROWS_AS(Real::from_decimal("zz", 128), domain_error);
    CHECK_THROWS_AS(Real::from_decimal("", 128), domain_error);
}

TEST_CASE("integer powers are sign-exact") {
    Real x = Real::from_decimal("-0.5", 128);
    CHECK(pow_int(x, 3) == Real::from_decimal("-0.125", 128));
    CHECK(pow_int(x, 2) == Real::from_decimal("0.25", 128));
    CHECK(pow_int(x, 0) == 1L);
}

TEST_CASE("pow2 and rounding") {
    CHECK(pow2(-3, 64) == Real::from_decimal("0.125", 64));
    Real x = Real::from_decimal("0.997", 256);
    CHECK(x.round_to(512) == x); // padding is exact
    CHECK(x.round_to(512).prec() == 512);
}
