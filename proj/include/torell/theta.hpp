#ifndef TORELL_THETA_HPP
#define TORELL_THETA_HPP

#include "torell/rational.hpp"

#include <complex>
#include <stdexcept>

namespace torell {

using Complex = std::complex<double>;

/// Thrown when a theta denominator vanishes within tolerance.
struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when the q-product cannot reach the target accuracy.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation parameters shared by every theta-based quantity.
/// Immutable; safe to share across threads.
struct EvalContext {
    Complex tau{0.0, 1.0};
    Complex z{0.21, 0.03};
    int trunc = 64;       // base q-product truncation; raised adaptively
    double tol = 1e-7;    // identity-residual tolerance

    Complex q() const { return std::exp(Complex(0.0, 2.0 * pi()) * tau); }
    bool valid() const { return tau.imag() > 0.0 && trunc > 0 && tol > 0.0; }
    static constexpr double pi() { return 3.14159265358979323846; }
};

struct SL2Matrix {
    long long a = 1, b = 0, c = 0, d = 1;
    bool valid() const { return a * d - b * c == 1; }
};

/// theta(t) = q^{1/8} (2 sin pi t) prod_{l>=1} (1-q^l)(1-q^l e^{2pi i t})(1-q^l e^{-2pi i t}).
/// Odd and entire in t; theta(t+1) = -theta(t).
Complex theta(Complex t, const EvalContext& ctx);

/// theta'(0) = 2 pi q^{1/8} prod_{l>=1} (1-q^l)^3.
Complex theta_prime_zero(const EvalContext& ctx);

/// phi(x, c) = theta(x + c z) / (theta(x) theta(c z)).  Symmetric in the
/// two numerator arguments; throws PoleError near a denominator zero.
Complex phi(Complex x, const Rational& c, const EvalContext& ctx);

/// Per-weight orbifold factor: phi(x + eps_g - eps_h tau, coeff - 1)
/// times e^{2 pi i (1 - coeff) eps_h z}.
Complex orb_factor(Complex x, const Rational& eps_g, const Rational& eps_h,
                   const Rational& coeff, const EvalContext& ctx);

/// Relative residual of the SL(2,Z) transformation law, minimized over the
/// eight eighth-root-of-unity candidates.
double modular_residual(const SL2Matrix& g, Complex t, const EvalContext& ctx);

} // namespace torell

#endif
