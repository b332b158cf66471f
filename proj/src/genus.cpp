#include "torell/genus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace torell {

namespace {

constexpr double kPi = EvalContext::pi();

Complex apply_form(const std::vector<long long>& form, const std::vector<Complex>& u)
{
    Complex s = 0.0;
    for (size_t i = 0; i < form.size(); ++i) {
        s += static_cast<double>(form[i]) * u[i];
    }
    return s;
}

double uniform(std::mt19937_64& rng, double lo, double hi)
{
    // Portable uniform double from the raw 64-bit stream.
    double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * x;
}

// chi_y factor (1 - y e^{-2 pi i x}) / (1 - e^{-2 pi i x}).
Complex chi_factor(Complex x, Complex y)
{
    Complex e = std::exp(Complex(0.0, -2.0 * kPi) * x);
    Complex den = 1.0 - e;
    if (std::abs(den) < 1e-9) {
        throw PoleError("degenerate chi_y sample");
    }
    return (1.0 - y * e) / den;
}

// Evaluates a piecewise function at a lattice point (used for pullback
// verification of divisor coefficients).
Rational eval_pw_at_ray(const Fan& fan, const PiecewisePoly& f,
                        const std::vector<long long>& point)
{
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        if (cone_contains(fan, static_cast<int>(c), point)) {
            std::vector<Rational> pt;
            for (long long x : point) {
                pt.emplace_back(Integer(x));
            }
            return f.per_cone[c].eval(pt);
        }
    }
    throw std::invalid_argument("point not contained in any maximal cone");
}

} // namespace

bool pair_valid(const ToricPair& pair)
{
    if (pair.delta.size() != pair.fan.rays.size()) {
        return false;
    }
    for (const auto& d : pair.delta) {
        if (d == Rational(1)) {
            return false;
        }
    }
    return true;
}

bool cy_check(const ToricPair& pair)
{
    if (!pair_valid(pair) || pair.fan.max_cones.empty()) {
        return false;
    }
    // Candidate covector from the first maximal cone's dual frame.
    auto frame = dual_frame(pair.fan, 0);
    std::vector<Rational> m(pair.fan.dim, Rational(0));
    for (size_t j = 0; j < frame.forms.size(); ++j) {
        Rational c = pair.delta[pair.fan.max_cones[0][j]] - Rational(1);
        for (int k = 0; k < pair.fan.dim; ++k) {
            m[k] += c * Rational(Integer(frame.forms[j][k]));
        }
    }
    for (size_t r = 0; r < pair.fan.rays.size(); ++r) {
        Rational v(0);
        for (int k = 0; k < pair.fan.dim; ++k) {
            v += m[k] * Rational(Integer(pair.fan.rays[r][k]));
        }
        if (v != pair.delta[r] - Rational(1)) {
            return false;
        }
    }
    return true;
}

EllValue normalized_ell(const ToricPair& pair, const TorusSample& sample,
                        const EvalContext& ctx,
                        const std::vector<std::vector<long long>>* substitution)
{
    if (!pair_valid(pair)) {
        throw std::invalid_argument("invalid toric pair");
    }
    EllValue out;
    for (size_t c = 0; c < pair.fan.max_cones.size(); ++c) {
        auto weights = cone_weights(pair.fan, static_cast<int>(c), substitution);
        Complex term = 1.0;
        for (size_t j = 0; j < weights.size(); ++j) {
            Rational coeff = pair.delta[pair.fan.max_cones[c][j]] - Rational(1);
            term *= phi(apply_form(weights[j], sample.u), coeff, ctx);
        }
        out.value += term;
        out.max_term = std::max(out.max_term, std::abs(term));
    }
    return out;
}

TorusSample sample_generic(const ToricPair& pair, const EvalContext& ctx,
                           std::mt19937_64& rng)
{
    for (int attempt = 0; attempt < 100; ++attempt) {
        TorusSample s;
        for (int i = 0; i < pair.fan.dim; ++i) {
            s.u.push_back(Complex(uniform(rng, -0.45, 0.45), uniform(rng, 0.01, 0.12)));
        }
        bool ok = true;
        for (size_t c = 0; c < pair.fan.max_cones.size() && ok; ++c) {
            auto weights = cone_weights(pair.fan, static_cast<int>(c));
            for (const auto& w : weights) {
                if (std::abs(theta(apply_form(w, s.u), ctx)) < 1e-6) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            return s;
        }
    }
    throw std::runtime_error("non-generic sample exhaustion");
}

double blowup_identity_residual(const ToricPair& fine, const ToricPair& coarse,
                                const FanMorphism& morphism,
                                const std::vector<TorusSample>& samples,
                                const EvalContext& ctx)
{
    // fine delta - 1 must be the pullback of coarse delta - 1.
    std::vector<Rational> coarse_c;
    for (const auto& d : coarse.delta) {
        coarse_c.push_back(d - Rational(1));
    }
    PiecewisePoly f = from_ray_coefficients(coarse.fan, coarse_c);
    for (size_t r = 0; r < fine.fan.rays.size(); ++r) {
        if (eval_pw_at_ray(coarse.fan, f, fine.fan.rays[r]) != fine.delta[r] - Rational(1)) {
            throw std::invalid_argument("not a pulled-back pair");
        }
    }
    double residual = 0.0;
    for (const auto& s : samples) {
        EllValue ef = normalized_ell(fine, s, ctx);
        EllValue ec = normalized_ell(coarse, s, ctx);
        residual = std::max(residual, std::abs(ef.value - ec.value) /
                                          std::max(1.0, std::abs(ec.value)));
    }
    (void)morphism;
    return residual;
}

Complex chi_y_genus(const Fan& fan, const std::vector<int>& subset,
                    const TorusSample& sample, Complex y)
{
    std::vector<int> J = subset;
    std::sort(J.begin(), J.end());
    Complex acc = 0.0;
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        std::vector<int> s = fan.max_cones[c];
        std::sort(s.begin(), s.end());
        if (!std::includes(s.begin(), s.end(), J.begin(), J.end())) {
            continue;
        }
        auto weights = cone_weights(fan, static_cast<int>(c));
        Complex term = 1.0;
        for (size_t j = 0; j < weights.size(); ++j) {
            if (std::find(J.begin(), J.end(), fan.max_cones[c][j]) != J.end()) {
                continue; // normal direction of a divisor in J
            }
            term *= chi_factor(apply_form(weights[j], sample.u), y);
        }
        acc += term;
    }
    return acc;
}

Rational stringy_euler(const Fan& fan, const StringyDivisor& divisor)
{
    for (const auto& a : divisor.coefficients) {
        if (a == Rational(-1)) {
            throw std::invalid_argument("divisor coefficient -1 not allowed");
        }
    }
    const size_t k = divisor.rays.size();
    Rational total(0);
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
        std::vector<int> J;
        Rational prod(1);
        for (size_t i = 0; i < k; ++i) {
            if (mask & (size_t{1} << i)) {
                J.push_back(divisor.rays[i]);
                prod *= Rational(1) / (divisor.coefficients[i] + Rational(1));
            }
        }
        std::sort(J.begin(), J.end());
        long long count = 0;
        for (const auto& mc : fan.max_cones) {
            std::vector<int> meet;
            for (int r : mc) {
                if (std::find(divisor.rays.begin(), divisor.rays.end(), r) !=
                    divisor.rays.end()) {
                    meet.push_back(r);
                }
            }
            std::sort(meet.begin(), meet.end());
            if (meet == J) {
                ++count;
            }
        }
        total += Rational(Integer(count)) * prod;
    }
    return total;
}

double stringy_limit_residual(const Fan& fan, const StringyDivisor& divisor,
                              const EvalContext& ctx)
{
    const double target = to_double(stringy_euler(fan, divisor));
    const double eps1 = 1e-3;
    const double eps2 = 1e-4;

    std::mt19937_64 rng(42);
    TorusSample sample;
    for (int i = 0; i < fan.dim; ++i) {
        sample.u.push_back(Complex(uniform(rng, 0.07, 0.41), uniform(rng, 0.011, 0.09)));
    }

    // Route 1: chi_y J-sum at y = 1 + eps.
    auto jsum = [&](double eps) {
        Complex y(1.0 + eps, 0.0);
        const size_t k = divisor.rays.size();
        Complex acc = 0.0;
        for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
            std::vector<int> J;
            Complex prod = 1.0;
            for (size_t i = 0; i < k; ++i) {
                if (mask & (size_t{1} << i)) {
                    J.push_back(divisor.rays[i]);
                    double a = to_double(divisor.coefficients[i]);
                    prod *= (y - 1.0) / (std::pow(y, a + 1.0) - 1.0) - 1.0;
                }
            }
            acc += chi_y_genus(fan, J, sample, y) * prod;
        }
        return acc;
    };
    Complex a1 = jsum(eps1);
    Complex a2 = jsum(eps2);
    Complex a0 = (eps1 * a2 - eps2 * a1) / (eps1 - eps2);

    // Route 2: theta-based genus at q = 1e-6, z matched to y = 1 + eps.
    ToricPair pair;
    pair.fan = fan;
    pair.delta.assign(fan.rays.size(), Rational(0));
    for (size_t i = 0; i < divisor.rays.size(); ++i) {
        pair.delta[divisor.rays[i]] = -divisor.coefficients[i];
    }
    auto theta_route = [&](double eps) {
        EvalContext c2 = ctx;
        c2.tau = Complex(0.0, 3.0 * std::log(10.0) / kPi); // |q| = 1e-6
        c2.z = Complex(0.0, -std::log(1.0 + eps) / (2.0 * kPi));
        Complex tz = theta(-c2.z, c2);
        Complex pref = 1.0;
        for (int i = 0; i < fan.dim; ++i) {
            pref *= tz;
        }
        return pref * normalized_ell(pair, sample, c2).value;
    };
    Complex b1 = theta_route(eps1);
    Complex b2 = theta_route(eps2);
    Complex b0 = (eps1 * b2 - eps2 * b1) / (eps1 - eps2);

    double r1 = std::abs(a0 - target);
    double r2 = std::abs(b0 - target);
    double r = std::max(r1, r2);
    if (!std::isfinite(r)) {
        throw std::runtime_error("extrapolation divergence");
    }
    return r;
}

} // namespace torell
