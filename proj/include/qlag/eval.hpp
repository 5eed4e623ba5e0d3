#pragma once

#include <vector>

#include "qlag/family.hpp"
#include "qlag/mag.hpp"

namespace qlag {

/// One recurrence evaluation at a fixed working precision, with a running
/// bound on the accumulated absolute rounding error for both the value and
/// the z-derivative.
struct EvalRich {
    Real value;
    Real deriv;
    Mag val_err;
    Mag deriv_err;
    long work_prec;
};

/// Evaluate the monic polynomial (and derivative) by the three-term
/// recurrence at the given working precision.  Exact
/// polynomial-in-z semantics; valid for every real alpha = delta+shift.
EvalRich eval_rec_at(const PolySpec& spec, const Real& z, long work_prec);

/// Evaluate with escalating precision until the absolute error bound drops
/// below 2^-rel_bits * max(|value|, 2^floor_log2).  The escalation cap is
/// max(64 * P, 16384) bits; on cap the best result is returned as-is and the
/// caller must inspect val_err.
EvalRich eval_rec_accurate(const PolySpec& spec, const Real& z, long rel_bits,
                           double floor_log2);

/// Canonical evaluator: value at params.precision, correct to ~2^-(P+8)
/// relative (absolute once |value| < 1).
Real eval_recurrence(const PolySpec& spec, const Real& z);

/// Certified sign of the polynomial at z: escalates precision until the
/// computed magnitude clears the error envelope.  Returns 0 when the value
/// is numerically zero even at the precision cap.
int sign_certified(const PolySpec& spec, const Real& z);

/// Independent evaluation through the terminating basic hypergeometric sum:
/// prefactor (-1)^n (q^{a+1};q)_n / q^{n(a+n)} times
/// sum_k (q^{-n};q)_k / ((q^{a+1};q)_k (q;q)_k) (-1)^k q^{k(k-1)/2}
/// (-q^{a+n+1} z)^k.  Rejects degenerate alpha = -1-j (j = 0..n-1), where
/// the sum's denominator factors vanish; the recurrence path remains the
/// canonical evaluator there.
Real eval_hypergeometric(const PolySpec& spec, const Real& z);

/// Monomial coefficients, low to high; leading coefficient exactly 1.
std::vector<Real> coefficients(const PolySpec& spec);

/// Horner evaluation of a coefficient list (low to high) at work_prec.
Real horner(const std::vector<Real>& coeffs, const Real& z, long work_prec);

} // namespace qlag
