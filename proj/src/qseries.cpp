#include "qlag/qseries.hpp"

namespace qlag {

namespace detail {

void require_nome(const Real& q) {
    if (!(q > 0L) || !(q < 1L))
        throw domain_error("q must lie in (0,1), got " + q.to_string(8));
}

} // namespace detail

Real pow_real(const Real& q, const Real& x) {
    detail::require_nome(q);
    if (x.is_integer() && x.fits_long()) {
        long k = x.to_long();
        if (k >= 0) return pow_int(q, k);
        return 1L / pow_int(q, -k);
    }
    Real r(std::max(q.prec(), x.prec()));
    mpfr_pow(r.raw(), q.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real pow_real_shifted(const Real& q, const Real& x, long k) {
    Real e = x + k;
    return pow_real(q, e);
}

Real qpoch(const Real& a, const Real& q, long k) {
    detail::require_nome(q);
    if (k < 0)
        throw domain_error("q-Pochhammer length must be >= 0");
    long prec = std::max(a.prec(), q.prec());
    Real p(1L, prec);
    Real aqj = a; // a * q^j
    for (long j = 0; j < k; ++j) {
        p *= (1L - aqj);
        if (p.is_zero()) return p;
        aqj *= q;
    }
    return p;
}

Real qpoch_inf(const Real& a, const Real& q) {
    detail::require_nome(q);
    long prec = std::max(a.prec(), q.prec());
    const Real cutoff = pow2(-(prec + 8), prec);
    Real p(1L, prec);
    Real aqj = a;
    // |a q^j| strictly decreasing, so the loop terminates
    while (abs(aqj) >= cutoff) {
        p *= (1L - aqj);
        if (p.is_zero()) return p;
        aqj *= q;
    }
    return p;
}

} // namespace qlag
