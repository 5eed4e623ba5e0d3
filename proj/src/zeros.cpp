#include "qlag/zeros.hpp"

#include <algorithm>
#include <cmath>

namespace qlag {

JacobiMatrix jacobi_matrix(const PolySpec& spec) {
    const long wp = spec.params.precision + 64;
    const Real q = spec.params.q.round_to(wp);
    const Real alpha = spec.alpha().round_to(wp);
    const long n = spec.degree;
    if (n < 1)
        throw domain_error("jacobi_matrix needs degree >= 1");

    JacobiMatrix m;
    m.prec = wp;
    m.diag.reserve(static_cast<std::size_t>(n));
    m.offsq.reserve(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    for (long k = 1; k <= n; ++k)
        m.diag.push_back(rec_diag(k, q, alpha));
    for (long k = 2; k <= n; ++k) {
        Real b = rec_offsq(k, q, alpha);
        if (!(b > 0L))
            throw regime_error("off-diagonal square <= 0 at k=" + std::to_string(k) +
                               ": parameters outside the orthogonal regime");
        m.offsq.push_back(std::move(b));
    }
    return m;
}

long sturm_count_below(const JacobiMatrix& m, const Real& x) {
    const long n = static_cast<long>(m.diag.size());
    long count = 0;
    Real d = m.diag[0] - x;
    if (d.is_zero()) d = -pow2(-2 * m.prec, m.prec);
    if (d < 0L) ++count;
    for (long i = 1; i < n; ++i) {
        d = m.diag[static_cast<std::size_t>(i)] - x -
            m.offsq[static_cast<std::size_t>(i - 1)] / d;
        if (d.is_zero()) d = -pow2(-2 * m.prec, m.prec);
        if (d < 0L) ++count;
    }
    return count;
}

namespace {

struct Enclosure {
    Real lo, hi;
};

Enclosure gershgorin(const JacobiMatrix& m) {
    const long n = static_cast<long>(m.diag.size());
    std::vector<Real> off;
    off.reserve(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    for (const Real& s : m.offsq) off.push_back(sqrt(s));
    Real lo = m.diag[0], hi = m.diag[0];
    for (long i = 0; i < n; ++i) {
        Real r(0L, m.prec);
        if (i > 0) r += off[static_cast<std::size_t>(i - 1)];
        if (i < n - 1) r += off[static_cast<std::size_t>(i)];
        lo = min(lo, m.diag[static_cast<std::size_t>(i)] - r);
        hi = max(hi, m.diag[static_cast<std::size_t>(i)] + r);
    }
    // pad so the boundary itself cannot hide an eigenvalue
    Real pad = (abs(lo) + abs(hi) + 1L) * pow2(-m.prec / 2, m.prec) + pow2(-m.prec / 2, m.prec);
    return Enclosure{lo - pad, hi + pad};
}

} // namespace

Real eigen_bisect(const JacobiMatrix& m, long k) {
    const long n = static_cast<long>(m.diag.size());
    if (k < 0 || k >= n)
        throw domain_error("eigen_bisect index out of range");
    if (n == 1) return m.diag[0].round_to(m.prec - 64);

    // precision of the underlying family (jacobi_matrix works at P+64)
    const long P = m.prec - 64;
    Enclosure e = gershgorin(m);
    Real lo = e.lo, hi = e.hi;
    const Real tol = pow2(-P / 2, m.prec);
    const long budget = 4 * m.prec + 256;
    for (long it = 0; it < budget; ++it) {
        if (hi - lo <= tol) return ((lo + hi) / 2L).round_to(P);
        Real mid = (lo + hi) / 2L;
        if (sturm_count_below(m, mid) <= k)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
    throw convergence_error("eigen_bisect: iteration budget exhausted (precision too low)");
}

Real refine_root(const PolySpec& spec, Real lo, Real hi, int sign_lo) {
    const long P = spec.params.precision;
    const long wp = 2 * P + 64;
    lo = lo.round_to(wp);
    hi = hi.round_to(wp);

    // bisection down to ~10 correct bits
    const Real coarse = pow2(-10, wp);
    while (hi - lo > coarse * (1L + abs(lo))) {
        Real mid = (lo + hi) / 2L;
        int s = sign_certified(spec, mid);
        if (s == 0) return mid; // numerically exact root
        if (s == sign_lo)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }

    // Newton supplies the digits
    Real x = (lo + hi) / 2L;
    const Real step_tol = pow2(-P / 2, wp);
    for (int it = 0; it < 120; ++it) {
        EvalRich r = eval_rec_at(spec, x, wp);
        if (r.deriv.is_zero())
            break;
        Real step = r.value / r.deriv;
        x -= step;
        if (x < lo || x > hi) {
            // safeguard: fall back to a bisection step
            x = (lo + hi) / 2L;
            int s = sign_certified(spec, x);
            if (s == 0) return x;
            if (s == sign_lo)
                lo = x;
            else
                hi = x;
            x = (lo + hi) / 2L;
            continue;
        }
        if (abs(step) <= step_tol || abs(step) <= abs(x) * pow2(-(2 * P), wp))
            return x;
    }
    throw convergence_error("refine_root: Newton did not reach the step tolerance");
}

namespace {

ZeroList zeros_impl(const PolySpec& spec, ExecPolicy policy, int attempt);

// orthogonal shifts: eigenvalues + Newton polish
std::vector<Real> zeros_orthogonal(const PolySpec& spec, ExecPolicy policy) {
    const long n = spec.degree;
    const long P = spec.params.precision;
    const JacobiMatrix m = jacobi_matrix(spec);
    std::vector<Real> out(static_cast<std::size_t>(n), Real(P));
    for_each_index(n, policy, [&](long k) {
        Real x = eigen_bisect(m, k).round_to(2 * P + 64);
        // Newton polish against the recurrence path
        for (int it = 0; it < 8; ++it) {
            EvalRich r = eval_rec_at(spec, x, 2 * P + 64);
            if (r.deriv.is_zero()) break;
            Real step = r.value / r.deriv;
            x -= step;
            if (abs(step) <= pow2(-P / 2 - 16, 2 * P + 64)) break;
        }
        out[static_cast<std::size_t>(k)] = x.round_to(P);
    });
    return out;
}

// quasi-orthogonal shift 0: sign-verified brackets
std::vector<Real> zeros_quasi(const PolySpec& spec, ExecPolicy policy) {
    const long n = spec.degree;
    const long P = spec.params.precision;
    spec.params.require_quasi_regime();

    if (n == 1) {
        const long wp = 2 * P;
        Real qa1 = pow_real(spec.params.q.round_to(wp), spec.params.delta.round_to(wp) + 1L);
        return {((1L - qa1) / qa1).round_to(P)};
    }

    std::vector<Real> out(static_cast<std::size_t>(n), Real(P));

    // shift-1 zeros supply the positive brackets
    const PolySpec shifted(spec.params, spec.shift + 1, n);
    const ZeroList ylist = zeros_impl(shifted, policy, 0);

    // bracket i=0: negative zero between the inner and outer closed-form
    // bounds; i>=1: positive zero between consecutive shift-1 zeros
    for_each_index(n, policy, [&](long i) {
        Real lo(P), hi(P);
        if (i == 0) {
            lo = constant(ConstantName::B, n, spec.params);
            hi = constant_A(Real(n, P), spec.params);
        } else {
            lo = ylist.zeros[static_cast<std::size_t>(i - 1)];
            hi = ylist.zeros[static_cast<std::size_t>(i)];
        }
        const int slo = sign_certified(spec, lo);
        const int shi = sign_certified(spec, hi);
        if (slo == 0 || shi == 0 || slo == shi)
            throw bracket_error(
                "no sign change across presumed bracket #" + std::to_string(i) + " = [" +
                lo.to_string(12) + ", " + hi.to_string(12) +
                "] (would falsify the ordering theorem backing it; reported, not papered over)");
        out[static_cast<std::size_t>(i)] = refine_root(spec, lo, hi, slo).round_to(P);
    });
    return out;
}

ZeroList zeros_impl(const PolySpec& spec, ExecPolicy policy, int attempt) {
    const long n = spec.degree;
    if (n < 1)
        throw domain_error("zeros: degree must be >= 1");
    const long P = spec.params.precision;

    std::vector<Real> zs = spec.shift >= 1 ? zeros_orthogonal(spec, policy)
                                           : zeros_quasi(spec, policy);
    std::sort(zs.begin(), zs.end());

    const Real tol = pow2(-P / 2, P);

    // cluster policy: zeros closer than the certificate width are recomputed
    // once at doubled precision; a persistent cluster is a degeneracy
    for (std::size_t i = 0; i + 1 < zs.size(); ++i) {
        if (zs[i + 1] - zs[i] < 2L * tol) {
            if (attempt >= 1)
                throw degeneracy_error("persistent zero cluster near " + zs[i].to_string(20));
            FamilyParams doubled(spec.params.q.round_to(2 * P),
                                 spec.params.delta.round_to(2 * P), 2 * P);
            ZeroList refined = zeros_impl(PolySpec(doubled, spec.shift, n), policy, attempt + 1);
            ZeroList out{spec, {}, refined.neg_count, tol};
            for (const Real& z : refined.zeros) out.zeros.push_back(z.round_to(P));
            return out;
        }
    }

    // certificates: an actual sign change across [z-tol, z+tol] per zero
    for_each_index(n, policy, [&](long i) {
        const Real& z = zs[static_cast<std::size_t>(i)];
        int s1 = sign_certified(spec, z - tol);
        int s2 = sign_certified(spec, z + tol);
        if (s1 * s2 != -1)
            throw bracket_error("zero certificate failed at " + z.to_string(20));
    });

    ZeroList out{spec, std::move(zs), 0, tol};
    for (const Real& z : out.zeros)
        if (z < 0L) ++out.neg_count;

    if (spec.shift >= 1 && out.neg_count != 0)
        throw regime_error("orthogonal-shift zero list contains a nonpositive zero");
    if (spec.shift == 0 && out.neg_count != 1)
        throw bracket_error("quasi-orthogonal zero list must contain exactly one negative zero");
    return out;
}

} // namespace

ZeroList zeros(const PolySpec& spec, ExecPolicy policy) { return zeros_impl(spec, policy, 0); }

ZeroList zeros_serial(const PolySpec& spec) { return zeros_impl(spec, ExecPolicy::serial, 0); }

namespace {

int horner_sign(const std::vector<Real>& c, const Real& z, long wp) {
    return horner(c, z, wp).sign();
}

Real oracle_refine(const std::vector<Real>& c, const std::vector<Real>& dc, Real lo, Real hi,
                   int slo, long P, long wp) {
    const Real want = pow2(-P / 2, wp);
    while (hi - lo > want * (1L + abs(lo))) {
        Real mid = (lo + hi) / 2L;
        int s = horner_sign(c, mid, wp);
        if (s == 0) return mid;
        if (s == slo)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
    Real x = (lo + hi) / 2L;
    for (int it = 0; it < 80; ++it) {
        Real f = horner(c, x, wp);
        Real fp = horner(dc, x, wp);
        if (fp.is_zero()) break;
        Real step = f / fp;
        x -= step;
        if (x < lo || x > hi) { x = (lo + hi) / 2L; break; }
        if (abs(step) <= (1L + abs(x)) * pow2(-(P + P / 2), wp)) break;
    }
    return x;
}

} // namespace

ZeroList companion_oracle(const PolySpec& spec) {
    const long n = spec.degree;
    if (n < 1 || n > 15)
        throw domain_error("companion_oracle is a desk-scale oracle: 1 <= n <= 15");
    const long P = spec.params.precision;
    const long wp = 2 * P + 256;

    std::vector<Real> c = coefficients(spec);
    for (Real& x : c) x = x.round_to(wp);

    // exact zero constant terms (integer-alpha boundary cases) factor out z
    std::vector<Real> roots;
    while (c.size() > 1 && c.front().is_zero()) {
        roots.push_back(Real(0L, P));
        c.erase(c.begin());
    }
    const long m = static_cast<long>(c.size()) - 1;

    std::vector<Real> dc;
    for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * static_cast<long>(i));

    // Cauchy upper bound (monic) and reversed-Cauchy lower bound
    Real maxc(0L, wp), maxtail(0L, wp);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) maxc = max(maxc, abs(c[i]));
    for (std::size_t i = 1; i < c.size(); ++i) maxtail = max(maxtail, abs(c[i]));
    Real R = (1L + maxc) * Real::from_ratio(101, 100, wp);
    Real lam = abs(c.front()) / (abs(c.front()) + maxtail);
    Real lo_floor = lam / 2L;

    double ratio0 = 1.0 + (1.0 - spec.params.q.to_double()) / 8.0;
    ratio0 = std::min(1.25, std::max(1.01, ratio0));

    for (int tries = 0; tries < 7; ++tries) {
        Real r = Real::from_decimal(std::to_string(ratio0), wp);
        // geometric mesh on both signs
        std::vector<Real> mesh;
        for (Real t = lo_floor; t <= R; t *= r) mesh.push_back(t);
        mesh.push_back(R);
        std::vector<Real> nodes;
        for (auto it = mesh.rbegin(); it != mesh.rend(); ++it) nodes.push_back(-*it);
        for (const Real& t : mesh) nodes.push_back(t);

        std::vector<std::pair<Real, Real>> brackets;
        int sprev = horner_sign(c, nodes.front(), wp);
        for (std::size_t i = 1; i < nodes.size(); ++i) {
            int s = horner_sign(c, nodes[i], wp);
            if (s != 0 && sprev != 0 && s != sprev)
                brackets.emplace_back(nodes[i - 1], nodes[i]);
            if (s != 0) sprev = s;
        }
        if (static_cast<long>(brackets.size()) == m) {
            std::vector<Real> found = roots;
            for (auto& [blo, bhi] : brackets)
                found.push_back(
                    oracle_refine(c, dc, blo, bhi, horner_sign(c, blo, wp), P, wp).round_to(P));
            std::sort(found.begin(), found.end());
            ZeroList out{spec, std::move(found), 0, pow2(-P / 2, P)};
            for (const Real& z : out.zeros)
                if (z < 0L) ++out.neg_count;
            return out;
        }
        ratio0 = std::pow(ratio0, 0.25);
    }
    throw convergence_error("companion_oracle: mesh refinement failed to isolate all roots");
}

} // namespace qlag
