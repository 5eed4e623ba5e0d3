#include "doctest.h"

#include <random>

#include "qlag/qseries.hpp"

using namespace qlag;

namespace {

// Independent exp/ln, built only from Real arithmetic: exp by scaling and
// squaring a short Taylor series, ln by Newton iteration on that exp.
// Test-only oracle for pow_real's exp(x ln q) path.
Real oracle_exp(const Real& x, long prec) {
    const long wp = prec + 64;
    Real y = x.round_to(wp);
    int halvings = 0;
    const Real small = pow2(-12, wp);
    while (abs(y) > small) {
        y /= 2L;
        ++halvings;
    }
    Real term(1L, wp), sum(1L, wp);
    for (long k = 1; k <= 24; ++k) {
        term *= y;
        term /= k;
        sum += term;
    }
    for (int i = 0; i < halvings; ++i) sum *= sum;
    return sum.round_to(prec);
}

Real oracle_ln(const Real& x, long prec) {
    const long wp = prec + 64;
    Real z(0L, wp);
    // crude start from bit length, then Newton: z += x e^{-z} - 1
    z = Real(x.log2abs_bound() > 0 ? long(x.log2abs_bound()) : long(x.log2abs_bound()) - 1, wp);
    z *= Real::from_decimal("0.6931471805599453", wp);
    for (int it = 0; it < 80; ++it) {
        Real step = x.round_to(wp) / oracle_exp(z, wp) - 1L;
        z += step;
        if (abs(step) <= pow2(-(prec + 16), wp)) break;
    }
    return z.round_to(prec);
}

} // namespace

TEST_CASE("pow_real trivial cases") {
    Real q = Real::from_decimal("0.5", 256);
    CHECK(pow_real(q, Real(1L, 256)) == q);
    CHECK(pow_real(q, Real(0L, 256)) == 1L);
    CHECK(pow_real(q, Real(-2L, 256)) == Real(4L, 256));
    CHECK_THROWS_AS(pow_real(Real::from_decimal("1.5", 256), Real(1L, 256)), domain_error);
    CHECK_THROWS_AS(pow_real(Real(0L, 256), Real(1L, 256)), domain_error);
}

TEST_CASE("pow_real(0.23,-0.1) against frozen digits and the series oracle") {
    const long P = 256;
    Real got = pow_real(Real::from_decimal("0.23", P), Real::from_decimal("-0.1", P));
    // frozen from an independent high-precision evaluation of exp(-0.1 ln 0.23)
    Real want = Real::from_decimal(
        "1.15831642950132140938296174563671014607432803599199067518314", P);
    CHECK(abs(got - want) <= pow2(-(P - 8), P) * want);

    Real lnq = oracle_ln(Real::from_decimal("0.23", P), P);
    Real viaseries = oracle_exp(Real::from_decimal("-0.1", P) * lnq, P);
    CHECK(abs(got - viaseries) <= pow2(-(P - 16), P) * want);
}

TEST_CASE("pow_real multiplicativity") {
    const long P = 256;
    std::mt19937_64 rng(20240517);
    for (const char* qs : {"0.23", "0.89", "0.997"}) {
        Real q = Real::from_decimal(qs, P);
        for (int i = 0; i < 12; ++i) {
            auto draw = [&] {
                double u = double(rng() >> 11) * 0x1p-53;
                return Real::from_decimal(std::to_string(u * 120.0 - 60.0), P);
            };
            Real m = draw(), n = draw();
            Real lhs = pow_real(q, m + n);
            Real rhs = pow_real(q, m) * pow_real(q, n);
            CHECK(abs(lhs - rhs) <= pow2(-(P - 8), P) * lhs);
        }
    }
}

TEST_CASE("qpoch basics") {
    const long P = 128;
    Real q = Real::from_decimal("0.5", P);
    CHECK(qpoch(Real::from_decimal("0.7", P), q, 0) == 1L);
    // (0.5;0.5)_2 = (1-0.5)(1-0.25) = 0.375, exact dyadic arithmetic
    CHECK(qpoch(q, q, 2) == Real::from_decimal("0.375", P));
    CHECK_THROWS_AS(qpoch(q, q, -1), domain_error);
}

TEST_CASE("qpoch recursion holds exactly as computed") {
    const long P = 192;
    Real a = Real::from_decimal("-0.8", P);
    Real q = Real::from_decimal("0.77", P);
    for (long k = 1; k <= 12; ++k) {
        Real aqk = a;
        for (long j = 0; j + 1 < k; ++j) aqk *= q;
        CHECK(qpoch(a, q, k) == qpoch(a, q, k - 1) * (1L - aqk));
    }
}

TEST_CASE("infinite q-Pochhammer against frozen digits and brute force") {
    const long P = 256;
    Real got = qpoch_inf(Real(-1L, P), Real::from_decimal("0.9", P));
    Real want = Real::from_decimal(
        "3488.33725029542051908844631958057748957709219970661162986431", P);
    CHECK(abs(got - want) <= pow2(-(P - 10), P) * want);

    // brute-force product at doubled precision until the factor is exactly 1
    const long wp = 2 * P;
    Real a(-1L, wp), q = Real::from_decimal("0.9", wp);
    Real p(1L, wp), aqj = a;
    while (!(1L - aqj == 1L)) {
        p *= (1L - aqj);
        aqj *= q;
    }
    CHECK(abs(got - p.round_to(P)) <= pow2(-(P - 10), P) * want);
}

TEST_CASE("doubled precision agrees to a few ulp") {
    const long P = 128;
    Real q = Real::from_decimal("0.89", P);
    Real x = Real::from_decimal("-13.7", P);
    Real atP = pow_real(q, x);
    Real at2P = pow_real(q.round_to(2 * P), x.round_to(2 * P)).round_to(P);
    CHECK(abs(atP - at2P) <= pow2(-(P - 3), P) * atP);

    Real a = Real::from_decimal("-0.4", P);
    Real pP = qpoch_inf(a, q);
    Real p2P = qpoch_inf(a.round_to(2 * P), q.round_to(2 * P)).round_to(P);
    CHECK(abs(pP - p2P) <= pow2(-(P - 3), P) * abs(pP));
}

TEST_CASE("QPochhammer value type") {
    const long P = 128;
    QPochhammer fin{Real::from_decimal("0.5", P), Real::from_decimal("0.5", P), 2};
    CHECK(fin.eval() == Real::from_decimal("0.375", P));
    QPochhammer inf{Real(-1L, P), Real::from_decimal("0.9", P), std::nullopt};
    CHECK(inf.eval() > 3488L);
}
