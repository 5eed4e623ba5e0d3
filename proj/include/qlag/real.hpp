#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "qlag/errors.hpp"

namespace qlag {

/// Arbitrary-precision real scalar.  Value-semantic wrapper around mpfr_t.
///
/// Every value carries its own precision in bits.  Binary operations produce
/// a result at the larger of the two operand precisions, so arithmetic among
/// P-bit values stays at P bits.  Comparisons and sign extraction are exact
/// on the stored representation.  Rounding mode is round-to-nearest
/// throughout.
class Real {
public:
    static constexpr long min_precision = 64;

    explicit Real(long prec = 64) {
        mpfr_init2(v_, check_prec(prec));
        mpfr_set_zero(v_, 1);
    }
    Real(long value, long prec) {
        mpfr_init2(v_, check_prec(prec));
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    /// Parse a decimal string at the given precision.  The string is the
    /// canonical carrier for q and delta: it is never routed through a
    /// 64-bit double, so "0.997" denotes the same number at every precision.
    static Real from_decimal(std::string_view s, long prec);

    /// Exact small-integer ratio p/r at the given precision.
    static Real from_ratio(long num, long den, long prec);

    long prec() const { return mpfr_get_prec(v_); }

    /// Exact sign: -1, 0, +1.
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    bool fits_long() const { return mpfr_fits_slong_p(v_, MPFR_RNDN) != 0; }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// log2-magnitude upper bound: |x| <= 2^log2abs_bound().  Returns a very
    /// negative value for 0.
    double log2abs_bound() const {
        if (mpfr_zero_p(v_)) return -1e300;
        return static_cast<double>(mpfr_get_exp(v_));
    }

    /// Round a copy to the given precision.
    Real round_to(long prec) const {
        Real r(check_prec(prec));
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    std::string to_string(int significant_digits = 0) const;

    // -- arithmetic ---------------------------------------------------------

    friend Real operator+(const Real& a, const Real& b) {
        Real r(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend Real operator+(const Real& a, long b) { Real r(a.prec()); mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, long b) { Real r(a.prec()); mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator-(long a, const Real& b) { Real r(b.prec()); mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, long b) { Real r(a.prec()); mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b) { Real r(a.prec()); mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator/(long a, const Real& b) { Real r(b.prec()); mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN); return r; }
    friend Real operator+(long a, const Real& b) { return b + a; }

    // -- exact comparisons --------------------------------------------------

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    static long check_prec(long prec) {
        if (prec < min_precision)
            throw domain_error("precision must be at least 64 bits, got " + std::to_string(prec));
        return prec;
    }
    static long join(const Real& a, const Real& b) {
        return a.prec() > b.prec() ? a.prec() : b.prec();
    }

    mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real floor(const Real& x);

/// x^k by binary exponentiation; sign-exact for every integer k.
Real pow_int(const Real& x, long k);

/// 2^e at the precision of the template value (exact).
Real pow2(long e, long prec);

Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

} // namespace qlag
