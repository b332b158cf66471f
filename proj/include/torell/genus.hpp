#ifndef TORELL_GENUS_HPP
#define TORELL_GENUS_HPP

#include "torell/fan.hpp"
#include "torell/pwpoly.hpp"
#include "torell/theta.hpp"

#include <optional>
#include <random>
#include <vector>

namespace torell {

/// A toric variety together with a divisor sum delta_i D_i, delta_i != 1.
struct ToricPair {
    Fan fan;
    std::vector<Rational> delta; // one per ray
};

/// Equivariant parameters; generic for a given context when no theta
/// denominator argument is near a lattice point.
struct TorusSample {
    std::vector<Complex> u;
};

/// normalized_ell value plus the largest summand magnitude, for relative
/// residuals.
struct EllValue {
    Complex value{0.0, 0.0};
    double max_term = 0.0;
};

bool pair_valid(const ToricPair& pair);

/// True iff K_X + sum delta_i D_i = 0, i.e. the ray-value function
/// delta - 1 is globally linear.
bool cy_check(const ToricPair& pair);

/// Fixed-point sum of prod_j phi(x^C_j(u), delta_j - 1) over maximal cones.
EllValue normalized_ell(const ToricPair& pair, const TorusSample& sample,
                        const EvalContext& ctx,
                        const std::vector<std::vector<long long>>* substitution = nullptr);

/// Draws samples until all theta denominators stay away from zero;
/// throws std::runtime_error after 100 rejections.
TorusSample sample_generic(const ToricPair& pair, const EvalContext& ctx,
                           std::mt19937_64& rng);

/// Max relative deviation |ell(fine) - ell(coarse)| over the samples.
/// Requires fine delta - 1 to be the pullback of coarse delta - 1.
double blowup_identity_residual(const ToricPair& fine, const ToricPair& coarse,
                                const FanMorphism& morphism,
                                const std::vector<TorusSample>& samples,
                                const EvalContext& ctx);

/// chi_y of the stratum D_J (J a set of ray indices; empty J gives the
/// ambient variety): sum over maximal cones containing J of the product of
/// (1 - y e^{-2 pi i x})/(1 - e^{-2 pi i x}) over the weights dual to the
/// rays outside J.
Complex chi_y_genus(const Fan& fan, const std::vector<int>& subset,
                    const TorusSample& sample, Complex y);

/// Divisor for stringy invariants: rays I with coefficients a_i > -1.
struct StringyDivisor {
    std::vector<int> rays;
    std::vector<Rational> coefficients;
};

/// Batyrev's stratified sum, exactly: sum_{J subset I} e(D_J^o) prod 1/(a_j+1),
/// with e(D_J^o) = #{maximal cones whose rays meet I exactly in J}.
Rational stringy_euler(const Fan& fan, const StringyDivisor& divisor);

/// |extrapolated y->1 limit - stringy_euler|, maximized over the chi_y route
/// and the q->0 theta route.
double stringy_limit_residual(const Fan& fan, const StringyDivisor& divisor,
                              const EvalContext& ctx);

} // namespace torell

#endif
