#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torell/orbifold.hpp"

#include <cmath>
#include <random>

using namespace torell;

TEST_CASE("lambda weights satisfy the SU(2) condition")
{
    for (int n = 1; n <= 6; ++n) {
        CyclicAction g(n);
        for (int a = 0; a < n; ++a) {
            Rational s = g.lambda1(a) + g.lambda2(a);
            CHECK((s == Rational(0) || s == Rational(1)));
            CHECK(g.lambda1(a) >= Rational(0));
            CHECK(g.lambda1(a) < Rational(1));
        }
    }
}

TEST_CASE("trivial group reduces to the plain genus of C^2")
{
    EvalContext ctx;
    TorusSample s;
    s.u = {Complex(0.13, 0.05), Complex(0.31, 0.08)};
    Complex orb = orbifold_ell_c2(1, s, ctx);
    Complex plain = phi(s.u[0], Rational(-1), ctx) * phi(s.u[1], Rational(-1), ctx);
    CHECK(std::abs(orb - plain) < 1e-12 * std::abs(plain));
    CHECK(mckay_residual(1, {s}, ctx) < 1e-12);
}

TEST_CASE("A1 McKay identity at the pinned point")
{
    EvalContext ctx;
    ctx.z = Complex(0.21, 0.0);
    ctx.tau = Complex(0.0, 1.0);
    TorusSample s;
    s.u = {Complex(0.13, 0.02), Complex(0.37, -0.01)};
    Complex orb = orbifold_ell_c2(2, s, ctx);
    Complex res = resolution_ell(2, s, ctx);
    CHECK(std::abs(orb - res) / std::max(1.0, std::abs(res)) < 1e-7);
}

TEST_CASE("McKay correspondence for n up to 6")
{
    std::mt19937_64 rng(42);
    std::vector<EvalContext> contexts(2);
    contexts[1].z = Complex(0.13, 0.04);
    contexts[1].tau = Complex(0.1, 0.9);
    for (int n = 1; n <= 6; ++n) {
        for (const auto& ctx : contexts) {
            std::vector<TorusSample> ss;
            for (int i = 0; i < 10; ++i) {
                ss.push_back(sample_generic_orbifold(n, ctx, rng));
            }
            CHECK(mckay_residual(n, ss, ctx) < 1e-7);
        }
    }
}

TEST_CASE("orbifold Euler numbers")
{
    for (int n = 1; n <= 6; ++n) {
        CHECK(orbifold_euler(n) == n);
        CHECK(static_cast<int>(ale_fan(n).fan.max_cones.size()) == n);
    }
}

TEST_CASE("z->0 degeneration of the resolution genus counts fixed points")
{
    TorusSample s;
    s.u = {Complex(0.13, 0.02), Complex(0.29, 0.05)};
    for (int n = 1; n <= 4; ++n) {
        double z1 = 1e-3, z2 = 1e-4;
        auto value = [&](double zv) {
            EvalContext ctx;
            ctx.z = Complex(zv, 0.0);
            Complex th = theta(Complex(-zv, 0.0), ctx);
            return th * th * resolution_ell(n, s, ctx);
        };
        Complex extrapolated = (z1 * value(z2) - z2 * value(z1)) / (z1 - z2);
        CHECK(std::abs(extrapolated - static_cast<double>(n)) < 1e-3);
    }
}

TEST_CASE("orbifold blow-up identity")
{
    EvalContext ctx;
    std::mt19937_64 rng(42);
    for (int n : {1, 2, 3}) {
        std::vector<TorusSample> ss;
        for (int i = 0; i < 10; ++i) {
            ss.push_back(sample_generic_orbifold(n, ctx, rng));
        }
        double tol = (n == 1) ? 1e-9 : 1e-7;
        CHECK(orbifold_blowup_residual(n, ss, ctx) < tol);
    }
}
