#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torell/pwpoly.hpp"

#include <random>

using namespace torell;

namespace {

Fan c2_fan()
{
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {0, 1}};
    f.max_cones = {{0, 1}};
    return f;
}

Fan c2_blowup_fan()
{
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {0, 1}, {1, 1}};
    f.max_cones = {{0, 2}, {2, 1}};
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

Polynomial u(int i) { return Polynomial::variable(2, i); }

// Compatible piecewise polynomial assembled from Thom basis elements with
// global polynomial multipliers.
PiecewisePoly random_pw(const Fan& fan, int degree, std::mt19937_64& rng)
{
    PiecewisePoly f = pw_zero(fan);
    for (int r = 0; r < static_cast<int>(fan.rays.size()); ++r) {
        Polynomial m = random_polynomial(fan.dim, degree, rng);
        PiecewisePoly basis = thom_basis_element(fan, {r});
        PiecewisePoly scaled;
        for (const auto& p : basis.per_cone) {
            scaled.per_cone.push_back(p * m);
        }
        f = pw_add(f, scaled);
    }
    return f;
}

} // namespace

TEST_CASE("from_ray_coefficients")
{
    Fan c2 = c2_fan();
    PiecewisePoly zero = from_ray_coefficients(c2, {Rational(0), Rational(0)});
    CHECK(pw_equal(zero, pw_zero(c2)));

    PiecewisePoly f = from_ray_coefficients(c2, {Rational(1), Rational(0)});
    CHECK(f.per_cone[0] == u(0));

    Fan bl = c2_blowup_fan();
    PiecewisePoly g = from_ray_coefficients(bl, {Rational(0), Rational(0), Rational(1)});
    CHECK(g.per_cone[0] == u(1)); // on <e1, e1+e2>
    CHECK(g.per_cone[1] == u(0)); // on <e1+e2, e2>
    CHECK(compatibility_check(bl, g));
}

TEST_CASE("thom basis elements")
{
    Fan c2 = c2_fan();
    PiecewisePoly full = thom_basis_element(c2, {0, 1});
    CHECK(full.per_cone[0] == u(0) * u(1));

    Fan bl = c2_blowup_fan();
    PiecewisePoly exc = thom_basis_element(bl, {2});
    CHECK(exc.per_cone[0] == u(1));
    CHECK(exc.per_cone[1] == u(0));

    CHECK_THROWS(thom_basis_element(bl, {0, 1})); // not a cone of the blow-up

    Fan p2bl = star_subdivide(p2_fan(), {0, 1});
    for (int r = 0; r < static_cast<int>(p2bl.rays.size()); ++r) {
        CHECK(compatibility_check(p2bl, thom_basis_element(p2bl, {r})));
    }
    for (const auto& cone : p2bl.max_cones) {
        CHECK(compatibility_check(p2bl, thom_basis_element(p2bl, cone)));
    }
}

TEST_CASE("compatibility rejects a mismatched assignment")
{
    Fan bl = c2_blowup_fan();
    PiecewisePoly f;
    f.per_cone = {u(0), u(0) * Rational(2)}; // disagree on the shared ray e1+e2
    CHECK(!compatibility_check(bl, f));
}

TEST_CASE("pushforward of the unit and of the exceptional class")
{
    Fan coarse = c2_fan();
    Fan fine = c2_blowup_fan();
    FanMorphism m = refinement_morphism(fine, coarse);

    CHECK(pw_equal(pushforward(m, pw_constant(fine, Rational(1))),
                   pw_constant(coarse, Rational(1))));
    CHECK(pw_equal(pushforward(m, thom_basis_element(fine, {2})), pw_zero(coarse)));

    // A fine maximal cone pushes to the Thom class of its image cone.
    CHECK(pw_equal(pushforward(m, thom_basis_element(fine, fine.max_cones[0])),
                   thom_basis_element(coarse, coarse.max_cones[0])));
}

TEST_CASE("pushforward along the identity is the identity")
{
    Fan p2 = p2_fan();
    FanMorphism id = identity_morphism(p2);
    std::mt19937_64 rng(3);
    PiecewisePoly f = random_pw(p2, 2, rng);
    CHECK(pw_equal(pushforward(id, f), f));
}

TEST_CASE("pushforward detects an inconsistent morphism")
{
    Fan p2 = p2_fan();
    Fan fine = star_subdivide(p2, {0, 1});
    FanMorphism m = refinement_morphism(fine, p2);
    // Misroute one subdivided child to the wrong parent cone.
    FanMorphism bad = m;
    for (size_t i = 0; i < bad.cone_assignment.size(); ++i) {
        if (fine.max_cones[i][0] == 3 || fine.max_cones[i][1] == 3) {
            bad.cone_assignment[i] = (bad.cone_assignment[i] + 1) % 3;
            break;
        }
    }
    CHECK_THROWS_AS(pushforward(bad, pw_constant(fine, Rational(1))), std::runtime_error);
}

TEST_CASE("pullback")
{
    Fan coarse = c2_fan();
    Fan fine = c2_blowup_fan();
    FanMorphism m = refinement_morphism(fine, coarse);

    CHECK(pw_equal(pullback(m, pw_constant(coarse, Rational(1))),
                   pw_constant(fine, Rational(1))));

    PiecewisePoly lin;
    lin.per_cone = {u(0)};
    PiecewisePoly pulled = pullback(m, lin);
    CHECK(pulled.per_cone[0] == u(0));
    CHECK(pulled.per_cone[1] == u(0));

    // Ray-coefficient functions pull back to their values on the fine rays.
    std::vector<Rational> alpha = {Rational(2), Rational(-3)};
    PiecewisePoly g = from_ray_coefficients(coarse, alpha);
    std::vector<Rational> beta = {Rational(2), Rational(-3), Rational(-1)};
    CHECK(pw_equal(pullback(m, g), from_ray_coefficients(fine, beta)));
}

TEST_CASE("projection formula")
{
    Fan coarse = c2_fan();
    Fan fine = c2_blowup_fan();
    FanMorphism m = refinement_morphism(fine, coarse);

    PiecewisePoly g;
    g.per_cone = {u(0) * u(1)};
    CHECK(projection_check(m, thom_basis_element(fine, {2}), g));

    Fan p2 = p2_fan();
    Fan p2f = star_subdivide(p2, {0, 1});
    FanMorphism mp = refinement_morphism(p2f, p2);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        PiecewisePoly f = random_pw(p2f, 2, rng);
        PiecewisePoly g2;
        Polynomial gg = random_polynomial(2, 3, rng);
        g2.per_cone.assign(p2.max_cones.size(), gg);
        CHECK(projection_check(mp, f, g2));
    }
}
