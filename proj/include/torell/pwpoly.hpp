#ifndef TORELL_PWPOLY_HPP
#define TORELL_PWPOLY_HPP

#include "torell/fan.hpp"
#include "torell/polynomial.hpp"

#include <random>
#include <vector>

namespace torell {

/// Element of C[Sigma]: one polynomial in the ambient dual coordinates per
/// maximal cone, compatible on shared faces.
struct PiecewisePoly {
    std::vector<Polynomial> per_cone;
};

PiecewisePoly pw_zero(const Fan& fan);
PiecewisePoly pw_constant(const Fan& fan, const Rational& c);
PiecewisePoly pw_add(const PiecewisePoly& a, const PiecewisePoly& b);
PiecewisePoly pw_mul(const PiecewisePoly& a, const PiecewisePoly& b);
bool pw_equal(const PiecewisePoly& a, const PiecewisePoly& b);

/// True iff the polynomials attached to any two cones agree as functions on
/// the shared face (checked by exact substitution of a face parametrization).
bool compatibility_check(const Fan& fan, const PiecewisePoly& f);

/// The unique piecewise linear function with f(ray_i) = coeffs[i].
PiecewisePoly from_ray_coefficients(const Fan& fan, const std::vector<Rational>& coeffs);

/// f^C: equal to prod_j x^C_j on every maximal cone containing C, zero
/// elsewhere.
PiecewisePoly thom_basis_element(const Fan& fan, const std::vector<int>& cone);

/// Localization pushforward: per target cone the exact rational-function sum
/// sum_i d f_{C_i} prod x^C_j / prod x^{C_i}_j, verified to cancel to a
/// polynomial.  Throws std::runtime_error("non-polynomial residue") when the
/// cancellation fails.
PiecewisePoly pushforward(const FanMorphism& morphism, const PiecewisePoly& f);

/// nu^*(g) = g o nu: composition with the lattice map.
PiecewisePoly pullback(const FanMorphism& morphism, const PiecewisePoly& g);

/// Projection formula, exactly: pushforward(f * pullback(g)) == pushforward(f) * g.
bool projection_check(const FanMorphism& morphism, const PiecewisePoly& f,
                      const PiecewisePoly& g);

/// Random polynomial of total degree <= max_degree with small rational
/// coefficients (test utility for randomized exact identities).
Polynomial random_polynomial(int nvars, int max_degree, std::mt19937_64& rng);

} // namespace torell

#endif
