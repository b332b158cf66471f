#include "torell/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace torell {

namespace {

constexpr double kPi = EvalContext::pi();
constexpr int kMaxTrunc = 200000;

int required_truncation(const EvalContext& ctx, double im_t)
{
    // |q|^L e^{2 pi |Im t|} < 1e-14, rounded up with a small margin.
    double log_abs_q = -2.0 * kPi * ctx.tau.imag();
    double needed = (-14.0 * std::log(10.0) - 2.0 * kPi * std::abs(im_t)) / log_abs_q;
    return std::max(ctx.trunc, static_cast<int>(std::ceil(needed)) + 2);
}

} // namespace

Complex theta(Complex t, const EvalContext& ctx)
{
    if (!ctx.valid()) {
        throw std::invalid_argument("invalid evaluation context");
    }
    int L = required_truncation(ctx, t.imag());
    if (L > kMaxTrunc || std::abs(t.imag()) >= static_cast<double>(L) * ctx.tau.imag()) {
        throw TruncationError("truncation insufficient");
    }
    const Complex q = ctx.q();
    const Complex i2pi(0.0, 2.0 * kPi);
    const Complex ep = std::exp(i2pi * t);
    const Complex em = std::exp(-i2pi * t);
    Complex prod = 2.0 * std::sin(kPi * t);
    Complex ql = 1.0;
    for (int l = 1; l <= L; ++l) {
        ql *= q;
        prod *= (1.0 - ql) * (1.0 - ql * ep) * (1.0 - ql * em);
    }
    return std::exp(i2pi * ctx.tau / 8.0) * prod;
}

Complex theta_prime_zero(const EvalContext& ctx)
{
    if (!ctx.valid()) {
        throw std::invalid_argument("invalid evaluation context");
    }
    int L = required_truncation(ctx, 0.0);
    const Complex q = ctx.q();
    Complex prod = 1.0;
    Complex ql = 1.0;
    for (int l = 1; l <= L; ++l) {
        ql *= q;
        Complex f = 1.0 - ql;
        prod *= f * f * f;
    }
    return 2.0 * kPi * std::exp(Complex(0.0, 2.0 * kPi) * ctx.tau / 8.0) * prod;
}

Complex phi(Complex x, const Rational& c, const EvalContext& ctx)
{
    if (c == Rational(0)) {
        throw std::invalid_argument("phi requires a nonzero coefficient");
    }
    Complex cz = to_double(c) * ctx.z;
    Complex den_x = theta(x, ctx);
    Complex den_cz = theta(cz, ctx);
    if (std::abs(den_x) < ctx.tol || std::abs(den_cz) < ctx.tol) {
        throw PoleError("pole");
    }
    return theta(x + cz, ctx) / (den_x * den_cz);
}

Complex orb_factor(Complex x, const Rational& eps_g, const Rational& eps_h,
                   const Rational& coeff, const EvalContext& ctx)
{
    if (coeff == Rational(1)) {
        throw std::invalid_argument("orb_factor requires coeff != 1");
    }
    Complex shifted = x + to_double(eps_g) - to_double(eps_h) * ctx.tau;
    Complex expo = std::exp(Complex(0.0, 2.0 * kPi) * (1.0 - to_double(coeff)) *
                            to_double(eps_h) * ctx.z);
    return phi(shifted, coeff - Rational(1), ctx) * expo;
}

double modular_residual(const SL2Matrix& g, Complex t, const EvalContext& ctx)
{
    if (!g.valid()) {
        throw std::invalid_argument("matrix not in SL(2,Z)");
    }
    Complex ctd = static_cast<double>(g.c) * ctx.tau + static_cast<double>(g.d);
    if (std::abs(ctd) == 0.0) {
        throw std::invalid_argument("c tau + d vanishes");
    }
    EvalContext transformed = ctx;
    transformed.tau = (static_cast<double>(g.a) * ctx.tau + static_cast<double>(g.b)) / ctd;
    Complex lhs = theta(t / ctd, transformed);
    Complex base = theta(t, ctx);
    Complex factor = std::sqrt(ctd) *
                     std::exp(Complex(0.0, kPi) * static_cast<double>(g.c) * t * t / ctd) * base;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 8; ++k) {
        Complex zeta = std::exp(Complex(0.0, kPi * k / 4.0));
        best = std::min(best, std::abs(lhs - zeta * factor));
    }
    return best / std::abs(base);
}

} // namespace torell
