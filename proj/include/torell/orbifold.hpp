#ifndef TORELL_ORBIFOLD_HPP
#define TORELL_ORBIFOLD_HPP

#include "torell/genus.hpp"
#include "torell/theta.hpp"

#include <vector>

namespace torell {

/// Cyclic G = Z_n inside SU(2), acting as (zeta x, zeta^{-1} y):
/// element a has weight pair (a/n, (n-a mod n)/n) in [0,1).
struct CyclicAction {
    int order = 1;

    explicit CyclicAction(int n);
    Rational lambda1(int a) const;
    Rational lambda2(int a) const;
};

/// Orbifold elliptic genus of (C^2, 0, Z_n): average over the n^2 commuting
/// pairs of the shifted two-weight product at the origin.
Complex orbifold_ell_c2(int n, const TorusSample& sample, const EvalContext& ctx);

/// Fixed-point sum over the A_{n-1} resolution with delta = 0 everywhere.
Complex resolution_ell(int n, const TorusSample& sample, const EvalContext& ctx);

/// Max relative deviation |orbifold_ell_c2 - resolution_ell| over samples.
double mckay_residual(int n, const std::vector<TorusSample>& samples,
                      const EvalContext& ctx);

/// (1/n) sum over commuting pairs of e(fixed locus) = n; equals the number
/// of irreducible representations of Z_n and the fixed-point count of
/// ale_fan(n).
long long orbifold_euler(int n);

/// Genus-level change-of-variable check for the blow-up of C^2 at the
/// origin with G = Z_n: two exceptional fixed points with divisor datum
/// delta_E = -1 against the unblown orbifold genus.
double orbifold_blowup_residual(int n, const std::vector<TorusSample>& samples,
                                const EvalContext& ctx);

/// Samples generic for every theta argument appearing in the order-n
/// orbifold and resolution sums.
TorusSample sample_generic_orbifold(int n, const EvalContext& ctx, std::mt19937_64& rng);

} // namespace torell

#endif
