#include "torell/orbifold.hpp"

#include <cmath>
#include <stdexcept>

namespace torell {

namespace {

Complex apply_form(const std::vector<long long>& form, const std::vector<Complex>& u)
{
    Complex s = 0.0;
    for (size_t i = 0; i < form.size(); ++i) {
        s += static_cast<double>(form[i]) * u[i];
    }
    return s;
}

Rational frac(const Rational& r)
{
    Integer q = r.numerator() / r.denominator();
    Rational f = r - Rational(q);
    if (f < Rational(0)) {
        f += Rational(1);
    }
    return f;
}

double uniform(std::mt19937_64& rng, double lo, double hi)
{
    double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * x;
}

// Sum over the two exceptional fixed points of the blown-up orbifold pair.
Complex blowup_orbifold_ell(int n, const TorusSample& sample, const EvalContext& ctx)
{
    CyclicAction g(n);
    const Complex u1 = sample.u[0];
    const Complex u2 = sample.u[1];
    Complex acc = 0.0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            // Chart (x, y/x): E = {x = 0}, tangent weights (u1, u2-u1).
            Complex c0 = orb_factor(u1, g.lambda1(a), g.lambda1(b), Rational(-1), ctx) *
                         orb_factor(u2 - u1, frac(g.lambda2(a) - g.lambda1(a)),
                                    frac(g.lambda2(b) - g.lambda1(b)), Rational(0), ctx);
            // Chart (x/y, y): E = {y = 0}, tangent weights (u1-u2, u2).
            Complex c1 = orb_factor(u2, g.lambda2(a), g.lambda2(b), Rational(-1), ctx) *
                         orb_factor(u1 - u2, frac(g.lambda1(a) - g.lambda2(a)),
                                    frac(g.lambda1(b) - g.lambda2(b)), Rational(0), ctx);
            acc += c0 + c1;
        }
    }
    return acc / static_cast<double>(n);
}

} // namespace

CyclicAction::CyclicAction(int n) : order(n)
{
    if (n < 1) {
        throw std::invalid_argument("cyclic group order must be >= 1");
    }
}

Rational CyclicAction::lambda1(int a) const
{
    return Rational(Integer(a % order), Integer(order));
}

Rational CyclicAction::lambda2(int a) const
{
    return Rational(Integer((order - a % order) % order), Integer(order));
}

Complex orbifold_ell_c2(int n, const TorusSample& sample, const EvalContext& ctx)
{
    CyclicAction g(n);
    Complex acc = 0.0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            acc += orb_factor(sample.u[0], g.lambda1(a), g.lambda1(b), Rational(0), ctx) *
                   orb_factor(sample.u[1], g.lambda2(a), g.lambda2(b), Rational(0), ctx);
        }
    }
    return acc / static_cast<double>(n);
}

Complex resolution_ell(int n, const TorusSample& sample, const EvalContext& ctx)
{
    AleFan a = ale_fan(n);
    Complex acc = 0.0;
    for (size_t c = 0; c < a.fan.max_cones.size(); ++c) {
        auto weights = cone_weights(a.fan, static_cast<int>(c), &a.weight_substitution);
        Complex term = 1.0;
        for (const auto& w : weights) {
            term *= phi(apply_form(w, sample.u), Rational(-1), ctx);
        }
        acc += term;
    }
    return acc;
}

double mckay_residual(int n, const std::vector<TorusSample>& samples,
                      const EvalContext& ctx)
{
    double residual = 0.0;
    for (const auto& s : samples) {
        Complex orb = orbifold_ell_c2(n, s, ctx);
        Complex res = resolution_ell(n, s, ctx);
        residual = std::max(residual,
                            std::abs(orb - res) / std::max(1.0, std::abs(res)));
    }
    return residual;
}

long long orbifold_euler(int n)
{
    if (n < 1) {
        throw std::invalid_argument("order must be >= 1");
    }
    // (id, id) contributes e(C^2) = 1; every other commuting pair fixes only
    // the origin, e = 1.  Average of n^2 ones over |G| = n.
    long long total = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            total += 1;
        }
    }
    return total / n;
}

double orbifold_blowup_residual(int n, const std::vector<TorusSample>& samples,
                                const EvalContext& ctx)
{
    double residual = 0.0;
    for (const auto& s : samples) {
        Complex blown = blowup_orbifold_ell(n, s, ctx);
        Complex base = orbifold_ell_c2(n, s, ctx);
        residual = std::max(residual,
                            std::abs(blown - base) / std::max(1.0, std::abs(base)));
    }
    return residual;
}

TorusSample sample_generic_orbifold(int n, const EvalContext& ctx, std::mt19937_64& rng)
{
    EvalContext screen = ctx;
    screen.tol = 1e-6;
    for (int attempt = 0; attempt < 100; ++attempt) {
        TorusSample s;
        s.u.push_back(Complex(uniform(rng, -0.45, 0.45), uniform(rng, 0.01, 0.12)));
        s.u.push_back(Complex(uniform(rng, -0.45, 0.45), uniform(rng, 0.01, 0.12)));
        try {
            orbifold_ell_c2(n, s, screen);
            resolution_ell(n, s, screen);
            orbifold_blowup_residual(n, {s}, screen);
            return s;
        } catch (const PoleError&) {
            continue;
        }
    }
    throw std::runtime_error("non-generic sample exhaustion");
}

} // namespace torell
