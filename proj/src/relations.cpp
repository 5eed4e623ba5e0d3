#include "qlag/relations.hpp"

#include <cmath>
#include <map>
#include <utility>
#include <vector>

namespace qlag {

std::string relation_name(RelationId id) {
    switch (id) {
    case RelationId::ThreeTerm: return "three-term";
    case RelationId::DegreeRaise: return "degree-raise";
    case RelationId::MixedB: return "mixed-b";
    case RelationId::MixedC: return "mixed-c";
    case RelationId::ShiftTwoDegreeOne: return "shift2-deg1";
    case RelationId::ShiftTwoDegreeTwo: return "shift2-deg2";
    case RelationId::ShiftThreeCubic: return "shift3-cubic";
    case RelationId::ShiftFourQuartic: return "shift4-quartic";
    }
    throw unknown_id_error("unknown relation id");
}

RelationId relation_from_name(std::string_view name) {
    for (RelationId id : kAllRelations)
        if (relation_name(id) == name) return id;
    throw unknown_id_error("unknown relation '" + std::string(name) + "'");
}

long relation_min_n(RelationId id) {
    switch (id) {
    case RelationId::ThreeTerm: return 2;
    case RelationId::DegreeRaise: return 1;
    case RelationId::MixedB: return 2;
    case RelationId::MixedC: return 1;
    case RelationId::ShiftTwoDegreeOne: return 1;
    case RelationId::ShiftTwoDegreeTwo: return 3;
    case RelationId::ShiftThreeCubic: return 2;
    case RelationId::ShiftFourQuartic: return 2;
    }
    throw unknown_id_error("unknown relation id");
}

namespace {

struct RelTerm {
    Real coeff;
    long zpow;
    long degree;
    int shift;
};

using Side = std::vector<RelTerm>;

// Both sides of the relation, coefficients at the precision of `p`.
std::pair<Side, Side> build_sides(RelationId id, long n, const FamilyParams& p) {
    const Real& q = p.q;
    const Real& d = p.delta;
    const long P = p.precision;
    const Real one(1L, P);

    switch (id) {
    case RelationId::ThreeTerm: {
        Real an = constant(ConstantName::a, n, p);
        Real cn = rec_offsq(n, q, d);
        Side lhs{{one, 0, n, 0}};
        Side rhs{{one, 1, n - 1, 0}, {-an, 0, n - 1, 0}, {-cn, 0, n - 2, 0}};
        return {lhs, rhs};
    }
    case RelationId::DegreeRaise: {
        Real k = (1L - pow_real(q, d + (n + 1))) / pow_real(q, d + (2 * n + 1));
        Side lhs{{one, 0, n + 1, 0}};
        Side rhs{{-k, 0, n, 0}, {one, 1, n, 1}};
        return {lhs, rhs};
    }
    case RelationId::MixedB: {
        Real bn = constant(ConstantName::b, n, p);
        Real g = (1L - pow_int(q, n - 1)) / pow_real(q, d + (2 * n - 2));
        Side lhs{{one, 0, n, 0}};
        Side rhs{{one, 1, n - 1, 0}, {-bn, 0, n - 1, 0}, {-g, 1, n - 2, 1}};
        return {lhs, rhs};
    }
    case RelationId::MixedC: {
        Real cn = constant(ConstantName::c, n, p);
        Real k = (1L - pow_real(q, d + (n + 1))) / pow_real(q, d + (2 * n + 1));
        Side lhs{{one, 1, n, 2}};
        Side rhs{{one, 1, n, 1}, {-cn, 0, n, 1}, {-k, 0, n, 0}};
        return {lhs, rhs};
    }
    case RelationId::ShiftTwoDegreeOne: {
        Real den = 1L - pow_int(q, n);
        Real u = (1L - pow_real(q, d + (n + 1))) / den;
        Real v = pow_int(q, n) * (1L - pow_real(q, d + 1)) / den;
        Side lhs{{u, 0, n, 0}};
        Side rhs{{v, 0, n, 1}, {one, 1, n - 1, 2}};
        return {lhs, rhs};
    }
    case RelationId::ShiftTwoDegreeTwo: {
        Real den = 1L - pow_real(q, d + n);
        Real w = (1L - pow_int(q, n - 1)) / den;
        Real s = pow_real(q, d + (2 * n)) / den;
        Real cn = constant(ConstantName::c, n, p);
        Real cnm1 = constant(ConstantName::c, n - 1, p);
        Side lhs{{w, 2, n - 2, 2}};
        Side rhs{{s * cn, 0, n, 0}, {one, 1, n - 1, 0}, {cnm1, 0, n - 1, 0}};
        return {lhs, rhs};
    }
    case RelationId::ShiftThreeCubic: {
        Real h = (1L - pow_real(q, d + (n + 1))) / (1L - pow_int(q, n - 1));
        Real bn = constant(ConstantName::b, n, p);
        Real An = constant_A(Real(n, P), p);
        Real Am = constant_A(Real(n, P) - d - 2L, p);
        Side lhs{{one, 3, n - 2, 3}};
        Side rhs{{h * bn, 1, n - 1, 0}, {-(h * bn * An), 0, n - 1, 0},
                 {one, 1, n, 0},        {-Am, 0, n, 0}};
        return {lhs, rhs};
    }
    case RelationId::ShiftFourQuartic: {
        Real Am = constant_A(Real(n, P) - d - 2L, p);
        Real bn = constant(ConstantName::b, n, p);
        Real Bn = constant(ConstantName::B, n, p);
        Real lead = Am * bn * ((1L - pow_int(q, n)) + q * (1L - pow_real(q, d + (n + 1)))) /
                    (pow_int(q, n) * (1L - pow_real(q, d + 1)));
        Real qdn1 = pow_real(q, d + (n + 1));
        Real beta = (1L + q) * (1L - pow_real(q, d + 2)) / qdn1;
        Real gamma = Am * (1L - pow_real(q, d + 3)) / qdn1;
        Side lhs{{one, 4, n - 2, 4}};
        Side rhs{{lead, 1, n - 1, 0}, {-(lead * Bn), 0, n - 1, 0},
                 {one, 2, n, 0},      {beta, 1, n, 0},
                 {-gamma, 0, n, 0}};
        return {lhs, rhs};
    }
    }
    throw unknown_id_error("unknown relation id");
}

struct SideEval {
    Real sum;
    Mag err;
    Mag abs_terms;
};

SideEval eval_side(const Side& side, const Real& z, const FamilyParams& pelev, long wp,
                   std::map<std::pair<long, int>, EvalRich>& memo) {
    SideEval out{Real(0L, wp), Mag::zero(), Mag::zero()};
    for (const RelTerm& t : side) {
        auto key = std::make_pair(t.degree, t.shift);
        auto it = memo.find(key);
        if (it == memo.end()) {
            PolySpec s(pelev, t.shift, t.degree);
            it = memo.emplace(key, eval_rec_at(s, z, wp)).first;
        }
        const EvalRich& pv = it->second;
        Real zp = t.zpow == 0 ? Real(1L, wp) : pow_int(z.round_to(wp), t.zpow);
        Real term = t.coeff.round_to(wp) * zp * pv.value;
        const Mag mcoeff = Mag::of(t.coeff) * Mag::of(zp);
        Mag term_err = mcoeff * pv.val_err + Mag::of(term).ulp(wp - 8);
        out.sum += term;
        out.err += term_err;
        out.abs_terms += Mag::of(term);
    }
    // additions
    out.err += out.abs_terms.ulp(wp - 6);
    return out;
}

} // namespace

RelationEval identity_residual_detail(RelationId id, const Real& z, long n,
                                      const FamilyParams& params) {
    if (n < relation_min_n(id))
        throw domain_error("relation '" + relation_name(id) + "' requires n >= " +
                           std::to_string(relation_min_n(id)));
    const long P = params.precision;
    const long cap = std::max(64 * P, 16384L);

    long wp = P + 96;
    for (;;) {
        FamilyParams pelev(params.q.round_to(wp), params.delta.round_to(wp), wp);
        auto [lhs_terms, rhs_terms] = build_sides(id, n, pelev);
        std::map<std::pair<long, int>, EvalRich> memo;
        SideEval L = eval_side(lhs_terms, z, pelev, wp, memo);
        SideEval R = eval_side(rhs_terms, z, pelev, wp, memo);

        Real residual = L.sum - R.sum;
        Real scale = max(Real(1L, wp), max(abs(L.sum), abs(R.sum)));
        Mag err = L.err + R.err;

        const double target = scale.log2abs_bound() - static_cast<double>(P) + 18.0;
        if (err.l2 <= target || wp >= cap) {
            RelationEval out{residual.round_to(P), L.sum.round_to(P), R.sum.round_to(P),
                             scale.round_to(P), false};
            out.within_contract =
                abs(out.residual) <= pow2(-(P - 24), P) * out.scale;
            return out;
        }
        long deficit = static_cast<long>(err.l2 - target) + 64;
        wp = std::min(cap, wp + std::max(deficit, wp / 2));
    }
}

Real identity_residual(RelationId id, const Real& z, long n, const FamilyParams& params) {
    return identity_residual_detail(id, z, n, params).residual;
}

} // namespace qlag
