#pragma once

#include <string>
#include <string_view>

#include "qlag/eval.hpp"

namespace qlag {

/// The mixed q-contiguous relations verified as polynomial identities at
/// points.  Named by structure: which degrees and parameter shifts they link.
enum class RelationId {
    ThreeTerm,          // L_n = (z-a_n) L_{n-1} - beta_n L_{n-2}
    DegreeRaise,        // L_{n+1} = -(1-q^{d+n+1})/q^{d+2n+1} L_n + z L_n^{(d+1)}
    MixedB,             // L_n = (z-b_n) L_{n-1} - (1-q^{n-1})/q^{d+2n-2} z L_{n-2}^{(d+1)}
    MixedC,             // z L_n^{(d+2)} = (z-c_n) L_n^{(d+1)} - (1-q^{d+n+1})/q^{d+2n+1} L_n
    ShiftTwoDegreeOne,  // links L_n, L_n^{(d+1)}, z L_{n-1}^{(d+2)}
    ShiftTwoDegreeTwo,  // links z^2 L_{n-2}^{(d+2)}, L_n, (z+c_{n-1}) L_{n-1}
    ShiftThreeCubic,    // z^3 L_{n-2}^{(d+3)} = ... (z-A_n), (z-A_{n-d-2}) weights
    ShiftFourQuartic,   // z^4 L_{n-2}^{(d+4)} = ... (z-B_n), quadratic weight
};

constexpr RelationId kAllRelations[] = {
    RelationId::ThreeTerm,         RelationId::DegreeRaise,
    RelationId::MixedB,            RelationId::MixedC,
    RelationId::ShiftTwoDegreeOne, RelationId::ShiftTwoDegreeTwo,
    RelationId::ShiftThreeCubic,   RelationId::ShiftFourQuartic,
};

std::string relation_name(RelationId id);
RelationId relation_from_name(std::string_view name);

/// Smallest degree index n for which the relation is stated.
long relation_min_n(RelationId id);

struct RelationEval {
    Real residual; // LHS - RHS at the evaluation point
    Real lhs;
    Real rhs;
    Real scale;    // max(|LHS|, |RHS|, 1)
    bool within_contract; // |residual| <= 2^-(P-24) * scale
};

/// Evaluate LHS - RHS of the relation at z with all polynomial values from
/// the recurrence path.  Internally escalates working precision until the
/// accumulated rounding envelope sits below the contract bound, so a passing
/// residual is meaningful and a failing one indicates a genuinely false
/// identity.
RelationEval identity_residual_detail(RelationId id, const Real& z, long n,
                                      const FamilyParams& params);

Real identity_residual(RelationId id, const Real& z, long n, const FamilyParams& params);

} // namespace qlag
