#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlag/cache.hpp"
#include "qlag/interlace.hpp"
#include "qlag/relations.hpp"

namespace qlag {

/// Interlacing patterns checked purely from zero lists (plus the distinguished
/// points 0 and -c_{n-1} where the pattern demands them).  Named by which
/// families they compare.
enum class PatternId {
    Shift1SameDegree,  // base n vs shift-1 n
    Shift1DegreeUp,    // base n+1 vs shift-1 n
    ConsecutiveDegrees,// base n vs base n+1
    Shift1VsShift2,    // shift-1 n vs shift-2 n
    Shift2DegreeDown1, // base n vs {0} + shift-2 (n-1)
    Shift2DegreeDown2, // base n vs {-c_{n-1}, 0} + shift-2 (n-2)
};

constexpr PatternId kAllPatterns[] = {
    PatternId::Shift1SameDegree,   PatternId::Shift1DegreeUp,
    PatternId::ConsecutiveDegrees, PatternId::Shift1VsShift2,
    PatternId::Shift2DegreeDown1,  PatternId::Shift2DegreeDown2,
};

std::string pattern_name(PatternId id);
PatternId pattern_from_name(std::string_view name);
long pattern_min_n(PatternId id);

/// Verdict plus the realized ordering for one named check.
struct InterlacingReport {
    std::string theorem_id;
    Real q;
    Real delta;
    long n = 0;
    Verdict verdict = Verdict::not_applicable;
    bool degenerate = false;
    std::string note;
    std::vector<LabeledValue> pattern;
    std::vector<Violation> violations;
};

/// Verify one stated ordering from freshly computed (cached) zero lists.
InterlacingReport check_interlace(PatternId id, const FamilyParams& params, long n,
                                  ZeroCache& cache = ZeroCache::global(),
                                  ExecPolicy policy = ExecPolicy::parallel);

/// Degree gap 2, same parameter: the augmented list {0, a_n} + zeros of the
/// lower polynomial must interlace the zeros of the higher one, while plain
/// Stieltjes interlacing fails (witness: the smallest lower zero lies below
/// the smallest higher zero).  Near-common parameters route to
/// not-applicable (common-zero analysis applies instead).
InterlacingReport check_stieltjes_failure(const FamilyParams& params, long n,
                                          ZeroCache& cache = ZeroCache::global(),
                                          ExecPolicy policy = ExecPolicy::parallel);

/// Degree gap 2 into the shift-1 family, augmented by the point b_n.
InterlacingReport check_bn_pattern(const FamilyParams& params, long n,
                                   ZeroCache& cache = ZeroCache::global(),
                                   ExecPolicy policy = ExecPolicy::parallel);

/// Same degree, shift 2: branches on the position of c_n relative to the
/// smallest positive zero (plain interlacing when z_2 > c_n; the
/// c_n-augmented pattern with its data-driven sub-branches otherwise).
InterlacingReport check_same_degree_shift2(const FamilyParams& params, long n,
                                           ZeroCache& cache = ZeroCache::global(),
                                           ExecPolicy policy = ExecPolicy::parallel);

enum class CommonZeroKind {
    gap2_at_a, // base family, degrees n and n-2, candidate point a_n
    shift2_at_c, // same degree n at shifts 0 and 2, candidate point c_n
};

std::string common_zero_kind_name(CommonZeroKind k);

struct CommonZeroReport {
    CommonZeroKind kind;
    Real q;
    Real delta;
    long n = 0;
    Real point;        // a_n or c_n
    Real residual;     // |L_n(point)| on the base family
    Real rel_gap;      // worst dist(point, nearest zero)/local gap over both lists
    bool is_common = false;
    long observed_index = -1; // 1-based position of the common zero in the reference list
    bool index_in_range = false;
    Verdict interlace_verdict = Verdict::not_applicable;
    bool degenerate = false;
    std::vector<Real> non_common; // primed list: zeros with the common point removed
    std::vector<LabeledValue> pattern;
    std::vector<Violation> violations;
    std::string note;
};

/// Decide commonality of the candidate point and, when common, verify the
/// stated interlacing of the non-common zeros.
CommonZeroReport check_common_zero(CommonZeroKind kind, const FamilyParams& params, long n,
                                   ZeroCache& cache = ZeroCache::global(),
                                   ExecPolicy policy = ExecPolicy::parallel);

struct DeltaSearchResult {
    Real delta_star;
    Real point;       // candidate point evaluated at delta_star
    long sign_changes = 0;
    long panels = 0;
};

/// Reconstruct the tuned delta at which the candidate point becomes a common
/// zero: scan the bracket for sign changes of delta -> L_n(point(delta)) and
/// bisect the first one to |d(bracket)| <= 2^-(P/2).  Throws bracket_error
/// (reporting the scanned signs) when no sign change exists.
DeltaSearchResult find_common_zero_delta(CommonZeroKind kind, const Real& q, long n,
                                         const Real& delta_lo, const Real& delta_hi,
                                         long precision, long panels = 128);

/// Inner and outer bounds for the negative zero: -c_{n-1} < B_n < z_{1,n} < A_n < 0.
struct BoundsRecord {
    Real q;
    Real delta;
    long n = 0;
    Real neg_c; // -c_{n-1}
    Real B;
    Real z1;
    Real A;
    bool chain_ok = false;
    std::string violation; // empty when the strict chain holds
};

BoundsRecord bounds(const FamilyParams& params, long n,
                    ZeroCache& cache = ZeroCache::global(),
                    ExecPolicy policy = ExecPolicy::parallel);

/// Truncated Jackson integral moment of z^i against the order-1
/// quasi-orthogonality weight z^{delta+1}/(-z;q)_inf on (0,inf):
///   mu_i = (1-q) sum_j q^j (q^j)^i L_n(q^j) (q^j)^{delta+1} / (-q^j;q)_inf.
struct MomentReport {
    long index = 0; // i
    long n = 0;
    Real q;
    Real delta;
    Real mu;
    Real abs_sum;          // sum of |terms|, the natural scale
    Real tail_small;       // bound on the dropped tail at the z->0 end
    Real tail_large;       // bound on the dropped tail at the z->inf end
    long j_min = 0, j_max = 0;
    bool vanishes = false; // |mu| <= 2^-(P/4) abs_sum
};

MomentReport moment(long i, const PolySpec& spec,
                    std::optional<std::pair<long, long>> truncation = std::nullopt);

/// Gap-relative separation of a candidate point from a zero list.
struct PointSeparation {
    Real dist;
    std::size_t nearest_index = 0; // 0-based
    Real rel_gap;                  // dist / adjacent gap
};

PointSeparation separation(const Real& point, const std::vector<Real>& zs);

/// A candidate point counts as (near-)common when its distance to the
/// nearest zero is below 1e-4 of the local zero gap, on both polynomials of
/// the pair.  Printed-precision parameters from tuned common-zero examples
/// land around 4e-6 while generic grid parameters stay above 1e-3, so the
/// threshold separates the two regimes by more than an order of magnitude
/// each way.
extern const char* const kCommonZeroRelGap; // "1e-4" as a decimal string

/// Standard verification grid: q values x delta values.
const std::vector<std::string>& standard_grid_q();
const std::vector<std::string>& standard_grid_delta();

} // namespace qlag
