#include "doctest.h"

#include "qlag/family.hpp"

using namespace qlag;

namespace {
const long P = 256;
}

TEST_CASE("quasi regime flag") {
    CHECK(FamilyParams::from_strings("0.5", "-1.5", P).quasi_regime());
    CHECK_FALSE(FamilyParams::from_strings("0.5", "-0.5", P).quasi_regime());
    CHECK_FALSE(FamilyParams::from_strings("0.5", "-2", P).quasi_regime());
    CHECK_THROWS_AS(FamilyParams::from_strings("1.2", "-1.5", P), domain_error);
    CHECK_THROWS_AS(FamilyParams::from_strings("0.5", "-1.5", 32), domain_error);
}

TEST_CASE("a_26 and c_26 reference values") {
    auto p1 = FamilyParams::from_strings("0.997", "-1.121695", P);
    Real a26 = constant(ConstantName::a, 26, p1);
    CHECK(abs(a26 - Real::from_decimal("0.167473", P)) < Real::from_decimal("5e-7", P));

    auto p2 = FamilyParams::from_strings("0.94", "-1.92598", P);
    Real c26 = constant(ConstantName::c, 26, p2);
    CHECK(abs(c26 - Real::from_decimal("0.278236", P)) < Real::from_decimal("5e-7", P));
}

TEST_CASE("a_2 at the delta = -1 boundary is an exact rational") {
    // q = 1/2, delta = -1: numerator 1 - 1/4 + (1/2)(1 - q^0) = 3/4,
    // denominator q^2 = 1/4
    auto p = FamilyParams(Real::from_ratio(1, 2, P), Real(-1L, P), P);
    CHECK(constant(ConstantName::a, 2, p) == Real(3L, P));
}

TEST_CASE("constant signs in the quasi regime") {
    for (const char* qs : {"0.23", "0.89", "0.997"}) {
        for (const char* ds : {"-1.9", "-1.5", "-1.1"}) {
            auto p = FamilyParams::from_strings(qs, ds, P);
            for (long n : {1L, 2L, 7L, 20L}) {
                CHECK(constant(ConstantName::c, n, p) > 0L);
                CHECK(-constant(ConstantName::c, n, p) < 0L);
                if (n >= 2) CHECK(constant(ConstantName::b, n, p) > 0L);
                CHECK(constant_A(Real(n, P), p) < 0L);
                CHECK(constant(ConstantName::B, n, p) < 0L);
            }
        }
    }
}

TEST_CASE("A(x) rejects a vanishing denominator") {
    auto p = FamilyParams::from_strings("0.5", "-1.5", P);
    // delta + x + 1 = 0 at x = 0.5
    CHECK_THROWS_AS(constant_A(Real::from_decimal("0.5", P), p), domain_error);
    CHECK_THROWS_AS(constant(ConstantName::a, 0, p), domain_error);
}

TEST_CASE("recurrence diagonal at k=1 is the degree-1 root") {
    auto p = FamilyParams::from_strings("0.89", "-1.3", P);
    Real alpha = p.delta + 1L; // shift 1
    Real qa1 = pow_real(p.q, alpha + 1L);
    CHECK(abs(rec_diag(1, p.q, alpha) - (1L - qa1) / qa1) <=
          pow2(-(P - 8), P) * abs((1L - qa1) / qa1));
}

TEST_CASE("constants record bundles the four closed forms") {
    auto p = FamilyParams::from_strings("0.89", "-1.5", P);
    auto rec = constants_record(5, p);
    CHECK(rec.a_n == constant(ConstantName::a, 5, p));
    CHECK(rec.b_n == constant(ConstantName::b, 5, p));
    CHECK(rec.c_n == constant(ConstantName::c, 5, p));
    CHECK(rec.B_n == constant(ConstantName::B, 5, p));
}
