#include "qlag/checks.hpp"

#include <algorithm>

namespace qlag {

std::string pattern_name(PatternId id) {
    switch (id) {
    case PatternId::Shift1SameDegree: return "interlace-shift1";
    case PatternId::Shift1DegreeUp: return "interlace-shift1-up";
    case PatternId::ConsecutiveDegrees: return "interlace-consecutive";
    case PatternId::Shift1VsShift2: return "interlace-shift12";
    case PatternId::Shift2DegreeDown1: return "interlace-shift2-down1";
    case PatternId::Shift2DegreeDown2: return "interlace-shift2-down2";
    }
    throw unknown_id_error("unknown pattern id");
}

PatternId pattern_from_name(std::string_view name) {
    for (PatternId id : kAllPatterns)
        if (pattern_name(id) == name) return id;
    throw unknown_id_error("unknown pattern '" + std::string(name) + "'");
}

long pattern_min_n(PatternId id) {
    switch (id) {
    case PatternId::Shift1SameDegree: return 1;
    case PatternId::Shift1DegreeUp: return 1;
    case PatternId::ConsecutiveDegrees: return 1;
    case PatternId::Shift1VsShift2: return 1;
    case PatternId::Shift2DegreeDown1: return 2;
    case PatternId::Shift2DegreeDown2: return 3;
    }
    throw unknown_id_error("unknown pattern id");
}

std::string common_zero_kind_name(CommonZeroKind k) {
    return k == CommonZeroKind::gap2_at_a ? "common-a" : "common-c";
}

const char* const kCommonZeroRelGap = "1e-4";

const std::vector<std::string>& standard_grid_q() {
    static const std::vector<std::string> g{"0.23", "0.5", "0.89", "0.94", "0.997"};
    return g;
}

const std::vector<std::string>& standard_grid_delta() {
    static const std::vector<std::string> g{"-1.9", "-1.5", "-1.1"};
    return g;
}

namespace {

std::vector<Real> zeros_of(ZeroCache& cache, const FamilyParams& params, int shift, long degree,
                           ExecPolicy policy) {
    return cache.get(PolySpec(params, shift, degree), policy)->zeros;
}

std::vector<Real> positive_part(const std::vector<Real>& zs) {
    std::vector<Real> out;
    for (const Real& z : zs)
        if (z > 0L) out.push_back(z);
    return out;
}

InterlacingReport finish_report(InterlacingReport rep, std::vector<LabeledValue> seq,
                                long precision) {
    OrderingCheck oc = verify_strictly_increasing(seq, precision);
    rep.pattern = std::move(seq);
    rep.violations = oc.violations;
    rep.degenerate = oc.degenerate;
    if (oc.ok)
        rep.verdict = Verdict::holds;
    else if (oc.degenerate) {
        rep.verdict = Verdict::not_applicable;
        if (rep.note.empty()) rep.note = "tie within strictness tolerance";
    } else
        rep.verdict = Verdict::fails;
    return rep;
}

LabeledValue zero_point(long prec) { return {"0", Real(0L, prec)}; }

bool both_near(const PointSeparation& s1, const PointSeparation& s2, long prec) {
    const Real thr = Real::from_decimal(kCommonZeroRelGap, prec);
    return s1.rel_gap < thr && s2.rel_gap < thr;
}

} // namespace

PointSeparation separation(const Real& point, const std::vector<Real>& zs) {
    if (zs.empty())
        throw domain_error("separation: empty zero list");
    std::size_t best = 0;
    Real dist = abs(point - zs[0]);
    for (std::size_t i = 1; i < zs.size(); ++i) {
        Real d = abs(point - zs[i]);
        if (d < dist) {
            dist = d;
            best = i;
        }
    }
    Real gap(0L, point.prec());
    if (zs.size() == 1)
        gap = 1L + abs(zs[0]);
    else if (best == 0)
        gap = zs[1] - zs[0];
    else if (best + 1 == zs.size())
        gap = zs[best] - zs[best - 1];
    else
        gap = min(zs[best + 1] - zs[best], zs[best] - zs[best - 1]);
    return PointSeparation{dist, best, dist / gap};
}

InterlacingReport check_interlace(PatternId id, const FamilyParams& params, long n,
                                  ZeroCache& cache, ExecPolicy policy) {
    params.require_quasi_regime();
    if (n < pattern_min_n(id))
        throw domain_error("pattern '" + pattern_name(id) + "' requires n >= " +
                           std::to_string(pattern_min_n(id)));
    const long P = params.precision;
    InterlacingReport rep;
    rep.theorem_id = pattern_name(id);
    rep.q = params.q;
    rep.delta = params.delta;
    rep.n = n;

    std::vector<LabeledValue> seq;
    switch (id) {
    case PatternId::Shift1SameDegree: {
        auto z = label_list(zeros_of(cache, params, 0, n, policy), "z", n);
        auto y = label_list(zeros_of(cache, params, 1, n, policy), "y", n);
        seq.push_back(z[0]);
        seq.push_back(zero_point(P));
        for (long i = 0; i + 1 < n; ++i) {
            seq.push_back(y[static_cast<std::size_t>(i)]);
            seq.push_back(z[static_cast<std::size_t>(i + 1)]);
        }
        seq.push_back(y.back());
        break;
    }
    case PatternId::Shift1DegreeUp: {
        auto zp = label_list(zeros_of(cache, params, 0, n + 1, policy), "z", n + 1);
        auto y = label_list(zeros_of(cache, params, 1, n, policy), "y", n);
        seq.push_back(zp[0]);
        seq.push_back(zero_point(P));
        for (long i = 0; i < n; ++i) {
            seq.push_back(y[static_cast<std::size_t>(i)]);
            seq.push_back(zp[static_cast<std::size_t>(i + 1)]);
        }
        break;
    }
    case PatternId::ConsecutiveDegrees: {
        auto z = label_list(zeros_of(cache, params, 0, n, policy), "z", n);
        auto zp = label_list(zeros_of(cache, params, 0, n + 1, policy), "z", n + 1);
        seq.push_back(z[0]);
        seq.push_back(zp[0]);
        seq.push_back(zero_point(P));
        for (long i = 1; i < n; ++i) {
            seq.push_back(zp[static_cast<std::size_t>(i)]);
            seq.push_back(z[static_cast<std::size_t>(i)]);
        }
        seq.push_back(zp.back());
        break;
    }
    case PatternId::Shift1VsShift2: {
        auto y = label_list(zeros_of(cache, params, 1, n, policy), "y", n);
        auto x = label_list(zeros_of(cache, params, 2, n, policy), "x", n);
        seq.push_back(zero_point(P));
        for (long i = 0; i < n; ++i) {
            seq.push_back(y[static_cast<std::size_t>(i)]);
            seq.push_back(x[static_cast<std::size_t>(i)]);
        }
        break;
    }
    case PatternId::Shift2DegreeDown1: {
        auto z = label_list(zeros_of(cache, params, 0, n, policy), "z", n);
        auto w = label_list(zeros_of(cache, params, 2, n - 1, policy), "x", n - 1);
        seq.push_back(z[0]);
        seq.push_back(zero_point(P));
        seq.push_back(z[1]);
        for (long i = 0; i + 2 < n; ++i) {
            seq.push_back(w[static_cast<std::size_t>(i)]);
            seq.push_back(z[static_cast<std::size_t>(i + 2)]);
        }
        seq.push_back(w.back());
        break;
    }
    case PatternId::Shift2DegreeDown2: {
        auto z = label_list(zeros_of(cache, params, 0, n, policy), "z", n);
        auto x = label_list(zeros_of(cache, params, 2, n - 2, policy), "x", n - 2);
        Real mc = -constant(ConstantName::c, n - 1, params);
        seq.push_back({"-c[" + std::to_string(n - 1) + "]", mc});
        seq.push_back(z[0]);
        seq.push_back(zero_point(P));
        seq.push_back(z[1]);
        for (long i = 0; i + 2 < n; ++i) {
            seq.push_back(x[static_cast<std::size_t>(i)]);
            seq.push_back(z[static_cast<std::size_t>(i + 2)]);
        }
        break;
    }
    }
    return finish_report(std::move(rep), std::move(seq), P);
}

InterlacingReport check_stieltjes_failure(const FamilyParams& params, long n, ZeroCache& cache,
                                          ExecPolicy policy) {
    params.require_quasi_regime();
    if (n < 3)
        throw domain_error("stieltjes check requires n >= 3");
    const long P = params.precision;
    InterlacingReport rep;
    rep.theorem_id = "stieltjes-gap2";
    rep.q = params.q;
    rep.delta = params.delta;
    rep.n = n;

    const Real an = constant(ConstantName::a, n, params);
    const std::vector<Real> zn = zeros_of(cache, params, 0, n, policy);
    const std::vector<Real> zl = zeros_of(cache, params, 0, n - 2, policy);
    if (both_near(separation(an, zn), separation(an, zl), P)) {
        rep.verdict = Verdict::not_applicable;
        rep.note = "a_n is a (near-)common zero: common-zero analysis applies";
        return rep;
    }

    // augmented list {0, a_n} + zeros of the degree-(n-2) polynomial
    std::vector<LabeledValue> aug = label_list(zl, "z", n - 2);
    aug.push_back(zero_point(P));
    aug.push_back({"a[" + std::to_string(n) + "]", an});
    std::sort(aug.begin(), aug.end(),
              [](const LabeledValue& a, const LabeledValue& b) { return a.value < b.value; });
    auto z = label_list(zn, "z", n);
    rep.note = "stieltjes failure witness: z[1," + std::to_string(n - 2) + "] < z[1," +
               std::to_string(n) + "]";
    return finish_report(std::move(rep), interleave(aug, z), P);
}

InterlacingReport check_bn_pattern(const FamilyParams& params, long n, ZeroCache& cache,
                                   ExecPolicy policy) {
    params.require_quasi_regime();
    if (n < 3)
        throw domain_error("b_n pattern requires n >= 3");
    const long P = params.precision;
    InterlacingReport rep;
    rep.theorem_id = "augmented-bn";
    rep.q = params.q;
    rep.delta = params.delta;
    rep.n = n;

    const Real bn = constant(ConstantName::b, n, params);
    const std::vector<Real> zn = zeros_of(cache, params, 0, n, policy);
    const std::vector<Real> w = zeros_of(cache, params, 1, n - 2, policy);
    if (both_near(separation(bn, zn), separation(bn, w), P)) {
        rep.verdict = Verdict::not_applicable;
        rep.note = "b_n is a (near-)common zero: not co-prime";
        return rep;
    }

    std::vector<LabeledValue> aug = label_list(w, "y", n - 2);
    aug.push_back({"b[" + std::to_string(n) + "]", bn});
    std::sort(aug.begin(), aug.end(),
              [](const LabeledValue& a, const LabeledValue& b) { return a.value < b.value; });
    std::vector<LabeledValue> pos = label_list(zn, "z", n);
    pos.erase(pos.begin()); // drop the negative zero

    // equal-size interlacing: the realized phase is data-driven
    std::vector<LabeledValue> seq =
        aug.front().value < pos.front().value ? interleave(aug, pos) : interleave(pos, aug);
    return finish_report(std::move(rep), std::move(seq), P);
}

InterlacingReport check_same_degree_shift2(const FamilyParams& params, long n, ZeroCache& cache,
                                           ExecPolicy policy) {
    params.require_quasi_regime();
    if (n < 2)
        throw domain_error("same-degree shift-2 check requires n >= 2");
    const long P = params.precision;
    InterlacingReport rep;
    rep.theorem_id = "same-degree-shift2";
    rep.q = params.q;
    rep.delta = params.delta;
    rep.n = n;

    const Real cn = constant(ConstantName::c, n, params);
    const std::vector<Real> zn = zeros_of(cache, params, 0, n, policy);
    const std::vector<Real> xn = zeros_of(cache, params, 2, n, policy);
    if (both_near(separation(cn, zn), separation(cn, xn), P)) {
        rep.verdict = Verdict::not_applicable;
        rep.note = "z_2 = c_n (common zero): common-zero analysis applies";
        rep.degenerate = true;
        return rep;
    }

    const Real& z2 = zn[1];
    const Real tie = pow2(-P / 2, P) * (1L + abs(cn));
    if (abs(z2 - cn) <= tie) {
        rep.verdict = Verdict::not_applicable;
        rep.degenerate = true;
        rep.note = "z_2 ~ c_n within strictness tolerance";
        return rep;
    }

    auto z = label_list(zn, "z", n);
    auto x = label_list(xn, "x", n);
    const std::string cl = "c[" + std::to_string(n) + "]";

    if (z2 > cn) {
        // plain interlacing branch
        rep.note = "branch z_2 > c_n: plain interlacing";
        return finish_report(std::move(rep), interleave(z, x), P);
    }

    // c_n-augmented branch; position of c_n among the shift-2 zeros decides
    // the sub-pattern
    if (cn < xn.front() || cn > xn.back()) {
        rep.note = "branch z_2 < c_n, c_n outside the shift-2 zero range";
        std::vector<LabeledValue> seq;
        seq.push_back(z[0]);
        seq.push_back(zero_point(P));
        for (long i = 0; i + 1 < n; ++i) {
            seq.push_back(x[static_cast<std::size_t>(i)]);
            seq.push_back(z[static_cast<std::size_t>(i + 1)]);
        }
        seq.push_back(x.back());
        seq.push_back({cl, cn});
        return finish_report(std::move(rep), std::move(seq), P);
    }

    rep.note = "branch z_2 < c_n, c_n inside the shift-2 zero range: augmented interlacing";
    std::vector<LabeledValue> merged = z;
    merged.push_back({cl, cn});
    std::sort(merged.begin(), merged.end(),
              [](const LabeledValue& a, const LabeledValue& b) { return a.value < b.value; });
    std::vector<LabeledValue> other;
    other.push_back(zero_point(P));
    for (auto& lx : x) other.push_back(lx);
    return finish_report(std::move(rep), interleave(merged, other), P);
}

CommonZeroReport check_common_zero(CommonZeroKind kind, const FamilyParams& params, long n,
                                   ZeroCache& cache, ExecPolicy policy) {
    params.require_quasi_regime();
    const long P = params.precision;
    if (kind == CommonZeroKind::gap2_at_a && n < 3)
        throw domain_error("common-zero (a_n) analysis requires n >= 3");
    if (kind == CommonZeroKind::shift2_at_c && n < 2)
        throw domain_error("common-zero (c_n) analysis requires n >= 2");

    CommonZeroReport rep;
    rep.kind = kind;
    rep.q = params.q;
    rep.delta = params.delta;
    rep.n = n;

    const bool at_a = kind == CommonZeroKind::gap2_at_a;
    rep.point = constant(at_a ? ConstantName::a : ConstantName::c, n, params);
    rep.residual = abs(eval_recurrence(PolySpec(params, 0, n), rep.point));

    const std::vector<Real> zn = zeros_of(cache, params, 0, n, policy);
    const std::vector<Real> partner =
        at_a ? zeros_of(cache, params, 0, n - 2, policy) : zeros_of(cache, params, 2, n, policy);
    const PointSeparation s1 = separation(rep.point, zn);
    const PointSeparation s2 = separation(rep.point, partner);
    rep.rel_gap = max(s1.rel_gap, s2.rel_gap);
    rep.is_common = both_near(s1, s2, P);
    if (!rep.is_common) {
        rep.note = "co-prime: candidate point is separated from both zero sets";
        rep.interlace_verdict = Verdict::not_applicable;
        return rep;
    }

    if (at_a) {
        // reference list for the index claim: the full zero list of the
        // degree-n polynomial
        rep.observed_index = static_cast<long>(s1.nearest_index) + 1;
        rep.index_in_range = rep.observed_index >= 3 && rep.observed_index <= n - 1;

        std::vector<Real> zprime;
        for (std::size_t i = 0; i < zn.size(); ++i)
            if (i != s1.nearest_index && zn[i] > 0L) zprime.push_back(zn[i]);
        rep.non_common = zprime;
        std::vector<Real> wpos = positive_part(partner);

        auto zp = label_list(zprime, "z'", n);
        auto wp = label_list(wpos, "w", n - 2);
        std::vector<LabeledValue> seq = interleave(zp, wp);
        OrderingCheck oc = verify_strictly_increasing(seq, P);
        rep.pattern = std::move(seq);
        rep.violations = oc.violations;
        rep.degenerate = oc.degenerate;
        rep.interlace_verdict = oc.ok ? Verdict::holds
                                      : (oc.degenerate ? Verdict::not_applicable : Verdict::fails);
        return rep;
    }

    // shift2_at_c: reference list for the index claim is the shift-2 family
    rep.observed_index = static_cast<long>(s2.nearest_index) + 1;
    rep.index_in_range = rep.observed_index >= 2 && rep.observed_index <= n - 1;

    std::vector<Real> xprime;
    for (std::size_t i = 0; i < partner.size(); ++i)
        if (i != s2.nearest_index) xprime.push_back(partner[i]);
    rep.non_common = xprime;
    std::vector<Real> zpos = positive_part(zn);

    auto zl = label_list(zpos, "z", n);
    auto xl = label_list(xprime, "x'", n);
    std::vector<LabeledValue> seq =
        zl.front().value < xl.front().value ? interleave(zl, xl) : interleave(xl, zl);
    OrderingCheck oc = verify_strictly_increasing(seq, P);
    rep.pattern = std::move(seq);
    rep.violations = oc.violations;
    rep.degenerate = oc.degenerate;
    rep.interlace_verdict =
        oc.ok ? Verdict::holds : (oc.degenerate ? Verdict::not_applicable : Verdict::fails);
    return rep;
}

DeltaSearchResult find_common_zero_delta(CommonZeroKind kind, const Real& q, long n,
                                         const Real& delta_lo, const Real& delta_hi,
                                         long precision, long panels) {
    if (!(delta_lo > -2L) || !(delta_hi < -1L) || !(delta_lo < delta_hi))
        throw domain_error("delta bracket must satisfy -2 < lo < hi < -1");
    if (panels < 4)
        throw domain_error("need at least 4 scan panels");
    const long P = precision;
    const ConstantName cname = kind == CommonZeroKind::gap2_at_a ? ConstantName::a : ConstantName::c;

    auto sign_at = [&](const Real& d) {
        FamilyParams p(q.round_to(P), d.round_to(P), P);
        Real pt = constant(cname, n, p);
        return sign_certified(PolySpec(p, 0, n), pt);
    };

    std::vector<Real> nodes;
    std::vector<int> signs;
    nodes.reserve(static_cast<std::size_t>(panels) + 1);
    for (long i = 0; i <= panels; ++i) {
        Real d = delta_lo + (delta_hi - delta_lo) * i / panels;
        nodes.push_back(d);
        signs.push_back(sign_at(d));
    }

    long changes = 0;
    long first = -1;
    for (long i = 0; i < panels; ++i) {
        if (signs[static_cast<std::size_t>(i)] == 0) {
            // the node itself is a root
            FamilyParams p(q.round_to(P), nodes[static_cast<std::size_t>(i)].round_to(P), P);
            return DeltaSearchResult{nodes[static_cast<std::size_t>(i)],
                                     constant(cname, n, p), 1, panels};
        }
        if (signs[static_cast<std::size_t>(i)] * signs[static_cast<std::size_t>(i + 1)] < 0) {
            ++changes;
            if (first < 0) first = i;
        }
    }
    if (first < 0) {
        std::string pat;
        for (int s : signs) pat += (s > 0 ? '+' : (s < 0 ? '-' : '0'));
        throw bracket_error("no sign change on the delta bracket; scanned signs: " + pat);
    }

    Real lo = nodes[static_cast<std::size_t>(first)];
    Real hi = nodes[static_cast<std::size_t>(first) + 1];
    int slo = signs[static_cast<std::size_t>(first)];
    const Real tol = pow2(-P / 2, P);
    while (hi - lo > tol * max(Real(1L, P), abs(lo))) {
        Real mid = (lo + hi) / 2L;
        int s = sign_at(mid);
        if (s == 0) { lo = mid; hi = mid; break; }
        if (s == slo)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
    Real dstar = (lo + hi) / 2L;
    FamilyParams p(q.round_to(P), dstar.round_to(P), P);
    return DeltaSearchResult{dstar, constant(cname, n, p), changes, panels};
}

BoundsRecord bounds(const FamilyParams& params, long n, ZeroCache& cache, ExecPolicy policy) {
    params.require_quasi_regime();
    if (n < 2)
        throw domain_error("bounds require n >= 2");
    const long P = params.precision;

    BoundsRecord rec;
    rec.q = params.q;
    rec.delta = params.delta;
    rec.n = n;
    rec.neg_c = -constant(ConstantName::c, n - 1, params);
    rec.B = constant(ConstantName::B, n, params);
    rec.A = constant_A(Real(n, P), params);
    rec.z1 = cache.get(PolySpec(params, 0, n), policy)->zeros.front();

    std::vector<LabeledValue> chain{{"-c[" + std::to_string(n - 1) + "]", rec.neg_c},
                                    {"B[" + std::to_string(n) + "]", rec.B},
                                    {"z[1," + std::to_string(n) + "]", rec.z1},
                                    {"A[" + std::to_string(n) + "]", rec.A},
                                    {"0", Real(0L, P)}};
    OrderingCheck oc = verify_strictly_increasing(chain, P);
    rec.chain_ok = oc.ok;
    if (!oc.ok && !oc.violations.empty())
        rec.violation = oc.violations.front().expected + " violated: " + oc.violations.front().detail;
    return rec;
}

MomentReport moment(long i, const PolySpec& spec, std::optional<std::pair<long, long>> truncation) {
    if (spec.shift != 0)
        throw domain_error("moments are defined for the shift-0 family");
    spec.params.require_quasi_regime();
    if (i < 0 || i > spec.degree)
        throw domain_error("moment index must satisfy 0 <= i <= n");
    const long P = spec.params.precision;
    const long wp = P + 64;
    const Real q = spec.params.q.round_to(wp);
    const Real d = spec.params.delta.round_to(wp);
    const PolySpec s(FamilyParams(q, d, wp), 0, spec.degree);

    const Real one(1L, wp);
    const Real stop = pow2(-P / 2 - 8, wp);
    const Real rho = pow_real(q, d + (i + 2)); // up-direction geometric ratio target

    // term at integer node j: (1-q) q^{j(i+d+2)} L_n(q^j) / (-q^j;q)_inf
    Real w0 = 1L / qpoch_inf(Real(-1L, wp), q); // j = 0 weight
    auto term_at = [&](const Real& qj, const Real& factor, const Real& weight) {
        return (one - q) * factor * eval_rec_at(s, qj, wp).value * weight;
    };

    Real sum(0L, wp), abs_sum(0L, wp);
    Real tail_small(0L, wp), tail_large(0L, wp);
    long jmin_used = 0, jmax_used = 0;

    const long jcap_up = truncation ? truncation->second : 400000;
    const long jcap_dn = truncation ? truncation->first : -400000;

    if (truncation && (truncation->first > 0 || truncation->second < 0))
        throw domain_error("explicit truncation range must contain j = 0");

    // j = 0 upward (z -> 0)
    {
        Real qj = one, factor = one, weight = w0;
        long j = 0;
        Real prev_abs(0L, wp);
        for (;;) {
            Real t = term_at(qj, factor, weight);
            sum += t;
            abs_sum += abs(t);
            jmax_used = j;
            // advance: 1/(-q^{j+1};q)_inf = (1+q^j) / (-q^j;q)_inf
            weight *= (one + qj);
            ++j;
            qj *= q;
            factor *= rho;
            Real ta = abs(t);
            if (truncation) {
                if (j > truncation->second) { tail_small = ta * rho / (one - rho); break; }
            } else {
                Real rbound = rho * (one + qj);
                if (j > 8 && rbound < one && ta <= stop * abs_sum &&
                    (prev_abs.is_zero() || ta <= prev_abs)) {
                    tail_small = ta * rbound / (one - rbound);
                    break;
                }
                if (j > jcap_up)
                    throw truncation_error("moment: z->0 tail did not reach the bound");
            }
            prev_abs = ta;
        }
    }

    // j = -1 downward (z -> inf); super-geometric decay through the weight
    {
        Real qj = 1L / q;                 // q^{-1}
        Real factor = 1L / rho;           // q^{-(i+d+2)}
        Real weight = w0 / (one + qj);    // 1/(-q^{-1};q)_inf
        long j = -1;
        Real prev_abs(0L, wp);
        int shrinking = 0;
        for (;;) {
            Real t = term_at(qj, factor, weight);
            sum += t;
            abs_sum += abs(t);
            jmin_used = j;
            Real ta = abs(t);
            if (!prev_abs.is_zero() && ta < prev_abs / 2L)
                ++shrinking;
            else
                shrinking = 0;
            if (truncation) {
                if (j <= truncation->first) { tail_large = ta; break; }
            } else if (shrinking >= 3 && ta <= stop * abs_sum) {
                // ratio observed < 1/2 repeatedly; tail below a geometric bound
                tail_large = ta;
                break;
            }
            if (j < jcap_dn)
                throw truncation_error("moment: z->inf tail did not reach the bound");
            prev_abs = ta;
            --j;
            qj /= q;
            factor /= rho;
            weight /= (one + qj);
        }
    }

    MomentReport rep;
    rep.index = i;
    rep.n = spec.degree;
    rep.q = spec.params.q;
    rep.delta = spec.params.delta;
    rep.mu = sum.round_to(P);
    rep.abs_sum = abs_sum.round_to(P);
    rep.tail_small = tail_small.round_to(P);
    rep.tail_large = tail_large.round_to(P);
    rep.j_min = jmin_used;
    rep.j_max = jmax_used;

    const Real budget = pow2(-P / 3, wp) * abs_sum;
    if (tail_small + tail_large > budget)
        throw truncation_error("moment: truncation bounds exceed the verdict tolerance");
    rep.vanishes = abs(sum) <= pow2(-P / 4, wp) * abs_sum;
    return rep;
}

} // namespace qlag
