#include "qlag/real.hpp"

#include <cstdio>
#include <memory>
#include <vector>

namespace qlag {

Real Real::from_decimal(std::string_view s, long prec) {
    Real r(check_prec(prec));
    std::string buf(s);
    if (buf.empty())
        throw domain_error("empty decimal string");
    if (mpfr_set_str(r.v_, buf.c_str(), 10, MPFR_RNDN) != 0)
        throw domain_error("cannot parse decimal string '" + buf + "'");
    return r;
}

Real Real::from_ratio(long num, long den, long prec) {
    if (den == 0)
        throw domain_error("zero denominator");
    Real r(check_prec(prec));
    mpfr_set_si(r.v_, num, MPFR_RNDN);
    mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
    return r;
}

std::string Real::to_string(int significant_digits) const {
    // 0 digits -> enough digits to reparse to the identical value
    int digits = significant_digits;
    if (digits <= 0)
        digits = static_cast<int>(prec() * 0.30103) + 3;
    char* out = nullptr;
    int len = mpfr_asprintf(&out, "%.*R*g", digits, MPFR_RNDN, v_);
    if (len < 0)
        throw std::runtime_error("mpfr_asprintf failed");
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

Real abs(const Real& x) {
    Real r(x.prec());
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x) {
    Real r(x.prec());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real exp(const Real& x) {
    Real r(x.prec());
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real log(const Real& x) {
    Real r(x.prec());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real floor(const Real& x) {
    Real r(x.prec());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

Real pow_int(const Real& x, long k) {
    Real r(x.prec());
    mpfr_pow_si(r.raw(), x.raw(), k, MPFR_RNDN);
    return r;
}

Real pow2(long e, long prec) {
    Real r(prec);
    mpfr_set_si_2exp(r.raw(), 1, e, MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

} // namespace qlag
