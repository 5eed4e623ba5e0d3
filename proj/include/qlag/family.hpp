#pragma once

#include <string_view>

#include "qlag/qseries.hpp"
#include "qlag/real.hpp"

namespace qlag {

/// Family parameters: the pair (q, delta) plus working precision in bits.
/// The primary regime of interest is delta in (-2,-1), where the shift-0
/// family is quasi-orthogonal of order 1.
struct FamilyParams {
    Real q;
    Real delta;
    long precision;

    FamilyParams(Real q_, Real delta_, long precision_)
        : q(std::move(q_)), delta(std::move(delta_)), precision(precision_) {
        if (precision < Real::min_precision)
            throw domain_error("precision must be >= 64 bits");
        detail::require_nome(q);
    }

    static FamilyParams from_strings(std::string_view q_str, std::string_view delta_str,
                                     long precision) {
        return FamilyParams(Real::from_decimal(q_str, precision),
                            Real::from_decimal(delta_str, precision), precision);
    }

    /// True iff -2 < delta < -1 (order-1 quasi-orthogonality; every theorem
    /// checker requires it).
    bool quasi_regime() const { return delta > -2L && delta < -1L; }

    void require_quasi_regime() const {
        if (!quasi_regime())
            throw domain_error("delta must lie in (-2,-1) for this operation, got " +
                               delta.to_string(12));
    }
};

/// One concrete polynomial: degree n of the family at parameter delta+shift.
/// Shift 0 is the quasi-orthogonal family; shifts 1..4 are the orthogonal
/// neighbours appearing in the mixed contiguous relations.
struct PolySpec {
    FamilyParams params;
    int shift;   // t in {0,1,2,3,4}
    long degree; // n >= 0

    PolySpec(FamilyParams p, int shift_, long degree_)
        : params(std::move(p)), shift(shift_), degree(degree_) {
        if (shift < 0 || shift > 4)
            throw domain_error("shift must be in {0,...,4}");
        if (degree < 0)
            throw domain_error("degree must be >= 0");
    }

    /// Effective parameter delta+shift of this polynomial.
    Real alpha() const { return params.delta + static_cast<long>(shift); }
};

/// Closed-form constants of the family, all at the base delta.
enum class ConstantName { a, b, c, B };

/// a_n, b_n, c_n, B_n.  Requires n >= 1.
Real constant(ConstantName name, long n, const FamilyParams& params);

/// A(x) = (1-q^{d+1})(1-q^{d+2}) / (q^{d+1} (1-q^{d+x+1}))  for real index x.
/// Throws domain_error when the denominator vanishes (impossible in the
/// quasi regime).
Real constant_A(const Real& x, const FamilyParams& params);

struct ConstantsRecord {
    Real a_n, b_n, c_n, B_n;
};

ConstantsRecord constants_record(long n, const FamilyParams& params);

/// Recurrence data at effective parameter alpha:
///   L_k = (z - rec_diag(k)) L_{k-1} - rec_offsq(k) L_{k-2}.
/// rec_diag(k) equals the closed form of a_k evaluated at alpha;
/// rec_offsq(k) = (1-q^{k-1})(1-q^{alpha+k-1}) / q^{2 alpha+4k-5}.
Real rec_diag(long k, const Real& q, const Real& alpha);
Real rec_offsq(long k, const Real& q, const Real& alpha);

} // namespace qlag
