#pragma once

#include <vector>

#include "qlag/eval.hpp"
#include "qlag/parallel.hpp"

namespace qlag {

/// Sorted simple real zeros of one polynomial, with certified sign changes.
struct ZeroList {
    PolySpec spec;
    std::vector<Real> zeros; // strictly increasing, length == degree
    int neg_count = 0;
    Real tol; // certified half-width: sign change across [z-tol, z+tol]
};

/// Symmetric tridiagonal (Jacobi) data whose eigenvalues are the zeros:
/// diagonal a_k (k=1..n) and squared off-diagonals beta_k (k=2..n) from the
/// three-term recurrence at alpha = delta+shift.
struct JacobiMatrix {
    std::vector<Real> diag;
    std::vector<Real> offsq; // offsq[k] pairs with diag[k], size n-1
    long prec = 0;
};

/// Requires the orthogonal regime (every beta_k > 0, i.e. shift >= 1 when
/// delta > -2); otherwise throws regime_error and callers fall back to the
/// bracketed mode.
JacobiMatrix jacobi_matrix(const PolySpec& spec);

/// Number of eigenvalues strictly below x (Sturm / LDL^T sign count).
long sturm_count_below(const JacobiMatrix& m, const Real& x);

/// k-th smallest eigenvalue (k in [0,n)), bisected from the Gershgorin
/// enclosure to absolute tolerance 2^-(P/2).  Throws convergence_error when
/// the iteration budget is exhausted.
Real eigen_bisect(const JacobiMatrix& m, long k);

/// Full zero set.
///  - shift >= 1: Jacobi eigenvalues, Newton-polished against the recurrence.
///  - shift == 0 (quasi regime): the negative zero is bisected on the
///    (B_n, A_n) enclosure and the positive zeros on consecutive shift-1
///    zero intervals; every bracket is verified by an actual sign change
///    before refinement, so no ordering theorem is trusted blindly.
/// Every returned zero carries a certified sign change across [z-tol,z+tol].
ZeroList zeros(const PolySpec& spec, ExecPolicy policy = ExecPolicy::parallel);

/// Serial reference implementation (identical results by construction).
ZeroList zeros_serial(const PolySpec& spec);

/// Desk-scale test oracle (n <= 15): roots of coefficients(spec) located by
/// exhaustive sign-change scanning of a geometric grid inside Cauchy-type
/// root bounds, refined by bisection and a final Newton polish.  Entirely
/// independent of the Jacobi path and of any interlacing bracket.
ZeroList companion_oracle(const PolySpec& spec);

/// Refine a sign-verified bracket to a zero at ~2(P)-bit accuracy
/// (bisection for safety, Newton for digits).  lo/hi must carry opposite
/// certified signs of the polynomial.
Real refine_root(const PolySpec& spec, Real lo, Real hi, int sign_lo);

} // namespace qlag
