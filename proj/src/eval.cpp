#include "qlag/eval.hpp"

#include <cmath>

namespace qlag {

namespace {

long escalation_cap(long p) { return std::max(64 * p, 16384L); }

// per-step rounding slack: incremental powers contribute O(k) roundings
double step_slack_bits(long k) { return 7.0 + std::log2(static_cast<double>(k + 2)); }

} // namespace

EvalRich eval_rec_at(const PolySpec& spec, const Real& z, long work_prec) {
    const long P = work_prec;
    const Real q = spec.params.q.round_to(P);
    const Real alpha = (spec.params.delta + static_cast<long>(spec.shift)).round_to(P);
    const Real x = z.round_to(P);
    const long n = spec.degree;

    EvalRich out{Real(1L, P), Real(0L, P), Mag::zero(), Mag::zero(), P};
    if (n == 0) return out;

    const Real qa = pow_real(q, alpha);
    const Real qa1 = qa * q; // q^{alpha+1}
    Real l1 = x - (1L - qa1) / qa1;

    Mag ulp1 = (Mag::of(x) + Mag::of((1L - qa1) / qa1)).ulp(P - 5);
    if (n == 1) {
        out.value = l1;
        out.deriv = Real(1L, P);
        out.val_err = ulp1;
        return out;
    }

    const Real q2 = q * q;
    const Real q4 = q2 * q2;
    // running powers for step k: q^k, q^{k-1}, q^{alpha+k-1},
    // q^{alpha+2k-1}, q^{2alpha+4k-5}
    Real pk = q2;
    Real pkm1 = q;
    Real pak1 = qa1;
    Real pa2k1 = qa * q2 * q;
    Real p2a4k5 = qa * qa * q2 * q;

    Real lm2(1L, P), lm1 = l1;
    Real dm2(0L, P), dm1(1L, P);
    Mag em2 = Mag::zero(), em1 = ulp1;
    Mag edm2 = Mag::zero(), edm1 = Mag::zero();

    for (long k = 2; k <= n; ++k) {
        Real ak = ((1L - pk) + q * (1L - pak1)) / pa2k1;
        Real ck = (1L - pkm1) * (1L - pak1) / p2a4k5;

        Real zma = x - ak;
        Real t1 = zma * lm1;
        Real t2 = ck * lm2;
        Real cur = t1 - t2;
        Real dcur = lm1 + zma * dm1 - ck * dm2;

        const Mag mzma = Mag::of(zma), mck = Mag::of(ck);
        const Mag ulp = (mzma * Mag::of(lm1) + mck * Mag::of(lm2) + Mag::of(cur))
                            .ulp(static_cast<long>(P - step_slack_bits(k)));
        Mag ecur = mzma * em1 + mck * em2 + ulp;
        const Mag ulpd = (Mag::of(lm1) + mzma * Mag::of(dm1) + mck * Mag::of(dm2) +
                          Mag::of(dcur))
                             .ulp(static_cast<long>(P - step_slack_bits(k)));
        Mag edcur = em1 + mzma * edm1 + mck * edm2 + ulpd;

        lm2 = std::move(lm1); lm1 = std::move(cur);
        dm2 = std::move(dm1); dm1 = std::move(dcur);
        em2 = em1; em1 = ecur;
        edm2 = edm1; edm1 = edcur;

        if (k < n) {
            pk *= q;
            pkm1 *= q;
            pak1 *= q;
            pa2k1 *= q2;
            p2a4k5 *= q4;
        }
    }

    out.value = std::move(lm1);
    out.deriv = std::move(dm1);
    out.val_err = em1;
    out.deriv_err = edm1;
    return out;
}

EvalRich eval_rec_accurate(const PolySpec& spec, const Real& z, long rel_bits,
                           double floor_log2) {
    const long P = spec.params.precision;
    const long cap = escalation_cap(P);
    long wp = P + 64;
    for (;;) {
        EvalRich r = eval_rec_at(spec, z, wp);
        const double target =
            std::max(r.value.log2abs_bound(), floor_log2) - static_cast<double>(rel_bits);
        if (r.val_err.l2 <= target || wp >= cap) return r;
        // jump straight past the measured deficit
        long deficit = static_cast<long>(r.val_err.l2 - target) + 64;
        wp = std::min(cap, wp + std::max(deficit, wp));
    }
}

Real eval_recurrence(const PolySpec& spec, const Real& z) {
    const long P = spec.params.precision;
    return eval_rec_accurate(spec, z, P + 8, 0.0).value.round_to(P);
}

int sign_certified(const PolySpec& spec, const Real& z) {
    const long P = spec.params.precision;
    const long cap = escalation_cap(P);
    long wp = P + 32;
    for (;;) {
        EvalRich r = eval_rec_at(spec, z, wp);
        if (r.value.is_zero()) {
            if (r.val_err.is_zero()) return 0; // exact arithmetic said zero
        } else if (r.val_err.l2 + 8.0 < r.value.log2abs_bound()) {
            return r.value.sign();
        }
        if (wp >= cap) return 0;
        wp = std::min(cap, 2 * wp);
    }
}

Real eval_hypergeometric(const PolySpec& spec, const Real& z) {
    const long P = spec.params.precision;
    const long n = spec.degree;
    {
        Real a = spec.alpha();
        if (a.is_integer() && a.fits_long()) {
            long ai = a.to_long();
            if (ai <= -1 && ai >= -n)
                throw domain_error("degenerate parameter: alpha = " + std::to_string(ai) +
                                   " makes (q^{alpha+1};q)_k vanish");
        }
    }
    const long cap = escalation_cap(P);
    long wp = P + 64;
    for (;;) {
        const Real q = spec.params.q.round_to(wp);
        const Real alpha = spec.alpha().round_to(wp);
        const Real x = z.round_to(wp);

        const Real qa = pow_real(q, alpha);
        const Real qa1 = qa * q; // q^{alpha+1}
        // running powers at term k: q^{k-n}, q^{alpha+1+k}, q^{alpha+n+1+k}, q^{k+1}
        Real pmn = 1L / pow_int(q, n);
        Real pa1k = qa1;
        Real pank = qa * pow_int(q, n + 1);
        Real pk1 = q;

        Real term(1L, wp), sum(1L, wp);
        Mag abs_sum = Mag::of(term);
        for (long k = 0; k < n; ++k) {
            Real ratio = (1L - pmn) * pank * x / ((1L - pa1k) * (1L - pk1));
            term *= ratio;
            sum += term;
            abs_sum += Mag::of(term);
            pmn *= q;
            pa1k *= q;
            pank *= q;
            pk1 *= q;
        }

        Real pref = qpoch(qa1, q, n); // (q^{alpha+1};q)_n
        pref /= pow_real(q, static_cast<long>(n) * (alpha + n));
        if (n % 2 == 1) pref = -pref;

        Real value = pref * sum;
        const Mag err = (Mag::of(pref) * abs_sum)
                            .ulp(static_cast<long>(wp - 8 - std::log2(double(n + 2))));
        const double target = std::max(value.log2abs_bound(), 0.0) - double(P + 8);
        if (err.l2 <= target || wp >= cap) return value.round_to(P);
        long deficit = static_cast<long>(err.l2 - target) + 64;
        wp = std::min(cap, wp + std::max(deficit, wp));
    }
}

std::vector<Real> coefficients(const PolySpec& spec) {
    const long P = spec.params.precision;
    const long wp = P + 64;
    const Real q = spec.params.q.round_to(wp);
    const Real alpha = spec.alpha().round_to(wp);
    const long n = spec.degree;

    std::vector<Real> prev{Real(1L, wp)};
    if (n == 0) return {Real(1L, P)};
    const Real qa1 = pow_real(q, alpha + 1L);
    std::vector<Real> cur{-(1L - qa1) / qa1, Real(1L, wp)};
    for (long k = 2; k <= n; ++k) {
        Real ak = rec_diag(k, q, alpha);
        Real ck = rec_offsq(k, q, alpha);
        std::vector<Real> next(static_cast<std::size_t>(k) + 1, Real(0L, wp));
        for (std::size_t i = 0; i < cur.size(); ++i) {
            next[i + 1] += cur[i];
            next[i] -= ak * cur[i];
        }
        for (std::size_t i = 0; i < prev.size(); ++i)
            next[i] -= ck * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    std::vector<Real> out;
    out.reserve(cur.size());
    for (const Real& c : cur) out.push_back(c.round_to(P));
    return out;
}

Real horner(const std::vector<Real>& coeffs, const Real& z, long work_prec) {
    const Real x = z.round_to(work_prec);
    Real acc(0L, work_prec);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + it->round_to(work_prec);
    return acc;
}

} // namespace qlag
