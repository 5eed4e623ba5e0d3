#pragma once

#include <algorithm>
#include <cmath>

#include "qlag/real.hpp"

namespace qlag {

/// Upper bound on a nonnegative magnitude, carried as log2 in a double.
/// Used to track rounding-error envelopes alongside high-precision
/// computations without paying for interval arithmetic.
struct Mag {
    double l2 = kZero;

    static constexpr double kZero = -1e300;

    static Mag zero() { return Mag{kZero}; }
    static Mag from_log2(double l) { return Mag{l}; }
    static Mag of(const Real& x) { return Mag{x.log2abs_bound()}; }
    /// 2^-p relative unit for values of this magnitude.
    Mag ulp(long p) const { return Mag{l2 - static_cast<double>(p)}; }

    bool is_zero() const { return l2 <= kZero / 2; }

    friend Mag operator*(Mag a, Mag b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return Mag{a.l2 + b.l2};
    }
    friend Mag operator+(Mag a, Mag b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        double hi = std::max(a.l2, b.l2), lo = std::min(a.l2, b.l2);
        return Mag{hi + std::log2(1.0 + std::exp2(lo - hi))};
    }
    Mag& operator+=(Mag o) { *this = *this + o; return *this; }
    Mag& operator*=(Mag o) { *this = *this * o; return *this; }

    friend bool operator<(Mag a, Mag b) { return a.l2 < b.l2; }
};

} // namespace qlag
