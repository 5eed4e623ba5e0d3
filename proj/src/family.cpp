#include "qlag/family.hpp"

namespace qlag {

Real constant(ConstantName name, long n, const FamilyParams& params) {
    if (n < 1)
        throw domain_error("constants are defined for n >= 1");
    const Real& q = params.q;
    const Real& d = params.delta;
    switch (name) {
    case ConstantName::a: {
        // (1 - q^n + q (1 - q^{d+n-1})) / q^{d+2n-1}
        Real num = (1L - pow_int(q, n)) + q * (1L - pow_real(q, d + (n - 1)));
        return num / pow_real(q, d + (2 * n - 1));
    }
    case ConstantName::b:
        return (1L - pow_real(q, d + n)) / pow_real(q, d + (2 * n - 1));
    case ConstantName::c:
        return -(1L - pow_real(q, d + 1)) / pow_real(q, d + (n + 1));
    case ConstantName::B: {
        Real num = (1L - pow_real(q, d + 1)) * (1L - pow_real(q, d + 3));
        Real den = pow_real(q, d + 1) *
                   ((1L - pow_int(q, n)) + q * (1L - pow_real(q, d + (n + 1))));
        if (den.is_zero())
            throw domain_error("B_n denominator vanishes");
        return num / den;
    }
    }
    throw unknown_id_error("unknown constant name");
}

Real constant_A(const Real& x, const FamilyParams& params) {
    const Real& q = params.q;
    const Real& d = params.delta;
    Real den = pow_real(q, d + 1) * (1L - pow_real(q, d + x + 1L));
    if (den.is_zero())
        throw domain_error("A(x) denominator vanishes: q^{delta+x+1} = 1");
    return (1L - pow_real(q, d + 1)) * (1L - pow_real(q, d + 2)) / den;
}

ConstantsRecord constants_record(long n, const FamilyParams& params) {
    return ConstantsRecord{
        constant(ConstantName::a, n, params),
        constant(ConstantName::b, n, params),
        constant(ConstantName::c, n, params),
        constant(ConstantName::B, n, params),
    };
}

Real rec_diag(long k, const Real& q, const Real& alpha) {
    Real num = (1L - pow_int(q, k)) + q * (1L - pow_real(q, alpha + (k - 1)));
    return num / pow_real(q, alpha + (2 * k - 1));
}

Real rec_offsq(long k, const Real& q, const Real& alpha) {
    Real num = (1L - pow_int(q, k - 1)) * (1L - pow_real(q, alpha + (k - 1)));
    return num / pow_real(q, 2L * alpha + (4 * k - 5));
}

} // namespace qlag
