#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torell/genus.hpp"

#include <cmath>
#include <random>

using namespace torell;

namespace {

const double PI = EvalContext::pi();

Fan c2_fan()
{
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {0, 1}};
    f.max_cones = {{0, 1}};
    return f;
}

Fan p1_fan()
{
    Fan f;
    f.dim = 1;
    f.rays = {{1}, {-1}};
    f.max_cones = {{0}, {1}};
    return f;
}

Fan p2_fan()
{
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, -1}};
    f.max_cones = {{0, 1}, {1, 2}, {2, 0}};
    return f;
}

Fan p1xp1_fan()
{
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    f.max_cones = {{0, 2}, {2, 1}, {1, 3}, {3, 0}};
    return f;
}

std::vector<Rational> deltas(std::initializer_list<long long> xs)
{
    std::vector<Rational> d;
    for (long long x : xs) {
        d.push_back(Rational(x));
    }
    return d;
}

} // namespace

TEST_CASE("cy_check")
{
    CHECK(cy_check(ToricPair{p2_fan(), deltas({0, 0, 3})}));
    CHECK(!cy_check(ToricPair{p2_fan(), deltas({0, 0, 0})}));
    CHECK(cy_check(ToricPair{p1_fan(), deltas({2, 0})}));
    CHECK(cy_check(ToricPair{p1xp1_fan(), deltas({2, 0, 2, 0})}));
}

TEST_CASE("normalized_ell on the single-cone fan is a product of phi factors")
{
    EvalContext ctx;
    ToricPair pair{c2_fan(), deltas({0, 0})};
    TorusSample s;
    s.u = {Complex(0.13, 0.05), Complex(0.31, 0.08)};
    EllValue v = normalized_ell(pair, s, ctx);
    Complex expected = phi(s.u[0], Rational(-1), ctx) * phi(s.u[1], Rational(-1), ctx);
    CHECK(std::abs(v.value - expected) < 1e-12 * std::abs(expected));
}

TEST_CASE("normalized_ell of P1 approaches the q->0 closed form, independent of u")
{
    EvalContext ctx;
    ctx.tau = Complex(0.0, 6.0);
    ToricPair pair{p1_fan(), deltas({0, 0})};
    Complex q8 = std::exp(Complex(0.0, 2.0 * PI) * ctx.tau / 8.0);
    Complex expected = std::cos(PI * ctx.z) / (q8 * std::sin(-PI * ctx.z));
    std::mt19937_64 rng(9);
    for (int i = 0; i < 5; ++i) {
        TorusSample s = sample_generic(pair, ctx, rng);
        EllValue v = normalized_ell(pair, s, ctx);
        CHECK(std::abs(v.value - expected) / std::abs(expected) < 1e-8);
    }
}

TEST_CASE("rigidity of toric Calabi-Yau pairs")
{
    std::vector<ToricPair> pairs = {
        {p2_fan(), deltas({0, 0, 3})},
        {p1xp1_fan(), deltas({2, 0, 2, 0})},
        {p1_fan(), deltas({2, 0})},
    };
    std::vector<std::pair<Complex, Complex>> zt = {
        {Complex(0.21, 0.03), Complex(0.0, 1.0)},
        {Complex(0.17, 0.05), Complex(0.0, 1.3)},
        {Complex(0.31, -0.02), Complex(0.2, 0.9)},
    };
    std::mt19937_64 rng(42);
    for (const auto& pair : pairs) {
        REQUIRE(cy_check(pair));
        for (const auto& [z, tau] : zt) {
            EvalContext ctx;
            ctx.z = z;
            ctx.tau = tau;
            for (int i = 0; i < 10; ++i) {
                TorusSample s = sample_generic(pair, ctx, rng);
                EllValue v = normalized_ell(pair, s, ctx);
                CHECK(std::abs(v.value) / std::max(1.0, v.max_term) < 1e-8);
            }
        }
    }
}

TEST_CASE("blow-up identity")
{
    EvalContext ctx;
    std::mt19937_64 rng(42);

    ToricPair c2{c2_fan(), deltas({0, -1})};
    FanMorphism id = identity_morphism(c2.fan);
    std::vector<TorusSample> ss;
    for (int i = 0; i < 5; ++i) {
        ss.push_back(sample_generic(c2, ctx, rng));
    }
    CHECK(blowup_identity_residual(c2, c2, id, ss, ctx) == 0.0);

    Fan c2bl = star_subdivide(c2.fan, {0, 1});
    ToricPair fine{c2bl, deltas({0, -1, -2})};
    FanMorphism m = refinement_morphism(c2bl, c2.fan);
    std::vector<TorusSample> ss2;
    for (int i = 0; i < 10; ++i) {
        ss2.push_back(sample_generic(fine, ctx, rng));
    }
    CHECK(blowup_identity_residual(fine, c2, m, ss2, ctx) < 1e-9);

    ToricPair p2{p2_fan(), deltas({0, 0, 0})};
    Fan p2bl = star_subdivide(p2.fan, {0, 1});
    ToricPair p2fine{p2bl, deltas({0, 0, 0, -1})};
    FanMorphism mp = refinement_morphism(p2bl, p2.fan);
    std::vector<TorusSample> ss3;
    for (int i = 0; i < 10; ++i) {
        ss3.push_back(sample_generic(p2fine, ctx, rng));
    }
    CHECK(blowup_identity_residual(p2fine, p2, mp, ss3, ctx) < 1e-9);

    // Coefficients that are not pulled back are rejected.
    ToricPair wrong{c2bl, deltas({0, -1, 0})};
    CHECK_THROWS_AS(blowup_identity_residual(wrong, c2, m, ss2, ctx),
                    std::invalid_argument);
}

TEST_CASE("chi_y genus")
{
    EvalContext ctx;
    std::mt19937_64 rng(12);
    Complex y(0.37, 0.21);

    Fan p2 = p2_fan();
    ToricPair probe{p2, deltas({0, 0, 0})};
    for (int i = 0; i < 5; ++i) {
        TorusSample s = sample_generic(probe, ctx, rng);
        Complex v = chi_y_genus(p2, {}, s, y);
        CHECK(std::abs(v - (1.0 + y + y * y)) < 1e-9);
    }

    Fan p1 = p1_fan();
    ToricPair probe1{p1, deltas({0, 0})};
    TorusSample s1 = sample_generic(probe1, ctx, rng);
    CHECK(std::abs(chi_y_genus(p1, {}, s1, y) - (1.0 + y)) < 1e-9);

    TorusSample s2 = sample_generic(probe, ctx, rng);
    CHECK(std::abs(chi_y_genus(p2, {}, s2, Complex(1.0, 0.0)) - 3.0) < 1e-9);
}

TEST_CASE("stringy Euler numbers, exactly")
{
    Fan p2 = p2_fan();
    CHECK(stringy_euler(p2, StringyDivisor{}) == Rational(3));
    CHECK(stringy_euler(p2, StringyDivisor{{0}, {Rational(1)}}) == Rational(2));
    CHECK(stringy_euler(p2, StringyDivisor{{0}, {Rational(2)}}) == Rational(5, 3));
    CHECK(stringy_euler(p2, StringyDivisor{{0, 1, 2},
                                           {Rational(0), Rational(0), Rational(0)}}) ==
          Rational(3));
}

TEST_CASE("stringy y->1 and q->0 limits agree with the exact values")
{
    EvalContext ctx;
    Fan p2 = p2_fan();
    CHECK(stringy_limit_residual(p2, StringyDivisor{}, ctx) < 1e-3);
    CHECK(stringy_limit_residual(p2, StringyDivisor{{0}, {Rational(1)}}, ctx) < 1e-3);
    CHECK(stringy_limit_residual(p2, StringyDivisor{{0}, {Rational(2)}}, ctx) < 1e-3);
}
