#include "torell/pwpoly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace torell {

namespace {

Polynomial form_poly(const std::vector<long long>& form)
{
    return Polynomial::linear_form(form);
}

// Product of the dual-frame forms of a maximal cone.
Polynomial frame_product(const Fan& fan, int cone)
{
    auto frame = dual_frame(fan, cone);
    Polynomial p = Polynomial::constant(fan.dim, Rational(1));
    for (const auto& f : frame.forms) {
        p = p * form_poly(f);
    }
    return p;
}

std::vector<Rational> random_rational_point(int nvars, std::mt19937_64& rng)
{
    std::vector<Rational> pt;
    for (int i = 0; i < nvars; ++i) {
        long long num = static_cast<long long>(rng() % 2001) - 1000;
        long long den = 1 + static_cast<long long>(rng() % 7);
        pt.emplace_back(Integer(num), Integer(den));
    }
    return pt;
}

} // namespace

PiecewisePoly pw_zero(const Fan& fan)
{
    PiecewisePoly p;
    p.per_cone.assign(fan.max_cones.size(), Polynomial(fan.dim));
    return p;
}

PiecewisePoly pw_constant(const Fan& fan, const Rational& c)
{
    PiecewisePoly p;
    p.per_cone.assign(fan.max_cones.size(), Polynomial::constant(fan.dim, c));
    return p;
}

PiecewisePoly pw_add(const PiecewisePoly& a, const PiecewisePoly& b)
{
    PiecewisePoly r;
    for (size_t i = 0; i < a.per_cone.size(); ++i) {
        r.per_cone.push_back(a.per_cone[i] + b.per_cone[i]);
    }
    return r;
}

PiecewisePoly pw_mul(const PiecewisePoly& a, const PiecewisePoly& b)
{
    PiecewisePoly r;
    for (size_t i = 0; i < a.per_cone.size(); ++i) {
        r.per_cone.push_back(a.per_cone[i] * b.per_cone[i]);
    }
    return r;
}

bool pw_equal(const PiecewisePoly& a, const PiecewisePoly& b)
{
    return a.per_cone == b.per_cone;
}

bool compatibility_check(const Fan& fan, const PiecewisePoly& f)
{
    for (size_t a = 0; a < fan.max_cones.size(); ++a) {
        for (size_t b = a + 1; b < fan.max_cones.size(); ++b) {
            std::vector<int> common;
            for (int r : fan.max_cones[a]) {
                if (std::find(fan.max_cones[b].begin(), fan.max_cones[b].end(), r) !=
                    fan.max_cones[b].end()) {
                    common.push_back(r);
                }
            }
            const int k = static_cast<int>(common.size());
            // Parametrize the face as sum_k t_k r_k and compare exactly.
            std::vector<Polynomial> subs;
            for (int i = 0; i < fan.dim; ++i) {
                std::vector<Rational> coeffs;
                for (int j = 0; j < k; ++j) {
                    coeffs.emplace_back(Integer(fan.rays[common[j]][i]));
                }
                subs.push_back(Polynomial::linear_form(coeffs));
            }
            if (f.per_cone[a].substitute(subs) != f.per_cone[b].substitute(subs)) {
                return false;
            }
        }
    }
    return true;
}

PiecewisePoly from_ray_coefficients(const Fan& fan, const std::vector<Rational>& coeffs)
{
    if (coeffs.size() != fan.rays.size()) {
        throw std::invalid_argument("one coefficient per ray required");
    }
    PiecewisePoly p;
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        auto frame = dual_frame(fan, static_cast<int>(c));
        Polynomial poly(fan.dim);
        for (size_t j = 0; j < frame.forms.size(); ++j) {
            poly = poly + form_poly(frame.forms[j]) * coeffs[fan.max_cones[c][j]];
        }
        p.per_cone.push_back(poly);
    }
    return p;
}

PiecewisePoly thom_basis_element(const Fan& fan, const std::vector<int>& cone)
{
    std::vector<int> face = cone;
    std::sort(face.begin(), face.end());
    bool present = false;
    PiecewisePoly p;
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        std::vector<int> s = fan.max_cones[c];
        std::sort(s.begin(), s.end());
        if (!std::includes(s.begin(), s.end(), face.begin(), face.end())) {
            p.per_cone.emplace_back(fan.dim);
            continue;
        }
        present = true;
        auto frame = dual_frame(fan, static_cast<int>(c));
        Polynomial poly = Polynomial::constant(fan.dim, Rational(1));
        for (size_t j = 0; j < frame.forms.size(); ++j) {
            if (std::find(face.begin(), face.end(), fan.max_cones[c][j]) != face.end()) {
                poly = poly * form_poly(frame.forms[j]);
            }
        }
        p.per_cone.push_back(poly);
    }
    if (!present) {
        throw std::invalid_argument("cone not found in fan");
    }
    return p;
}

PiecewisePoly pushforward(const FanMorphism& morphism, const PiecewisePoly& f)
{
    const Fan& src = morphism.source;
    const Fan& tgt = morphism.target;
    PiecewisePoly out;
    for (size_t tc = 0; tc < tgt.max_cones.size(); ++tc) {
        Polynomial target_num = frame_product(tgt, static_cast<int>(tc));
        std::vector<int> sources;
        for (size_t sc = 0; sc < src.max_cones.size(); ++sc) {
            if (morphism.cone_assignment[sc] == static_cast<int>(tc)) {
                sources.push_back(static_cast<int>(sc));
            }
        }
        std::vector<Polynomial> dens;
        for (int sc : sources) {
            dens.push_back(frame_product(src, sc));
        }
        // Sum over a common denominator, then cancel exactly.
        Polynomial num(src.dim);
        for (size_t i = 0; i < sources.size(); ++i) {
            Polynomial term = f.per_cone[sources[i]] * target_num;
            for (size_t j = 0; j < dens.size(); ++j) {
                if (j != i) {
                    term = term * dens[j];
                }
            }
            num = num + term;
        }
        Polynomial den = Polynomial::constant(src.dim, Rational(1));
        for (const auto& d : dens) {
            den = den * d;
        }
        auto quot = num.divide_exact(den);
        if (!quot) {
            throw std::runtime_error("non-polynomial residue");
        }
        Polynomial result = *quot * Rational(Integer(morphism.multiplicity));
        // Schwartz-Zippel guard on the cancellation.
        std::mt19937_64 rng(0x5eed);
        auto pt = random_rational_point(src.dim, rng);
        if (quot->eval(pt) * den.eval(pt) != num.eval(pt)) {
            throw std::runtime_error("non-polynomial residue");
        }
        out.per_cone.push_back(result);
    }
    return out;
}

PiecewisePoly pullback(const FanMorphism& morphism, const PiecewisePoly& g)
{
    const Fan& src = morphism.source;
    // v_i = sum_j L[i][j] u_j
    std::vector<Polynomial> subs;
    for (int i = 0; i < morphism.target.dim; ++i) {
        std::vector<Rational> coeffs;
        for (int j = 0; j < src.dim; ++j) {
            coeffs.emplace_back(Integer(morphism.lattice_map[i][j]));
        }
        subs.push_back(Polynomial::linear_form(coeffs));
    }
    PiecewisePoly out;
    for (size_t sc = 0; sc < src.max_cones.size(); ++sc) {
        out.per_cone.push_back(g.per_cone[morphism.cone_assignment[sc]].substitute(subs));
    }
    return out;
}

bool projection_check(const FanMorphism& morphism, const PiecewisePoly& f,
                      const PiecewisePoly& g)
{
    PiecewisePoly lhs = pushforward(morphism, pw_mul(f, pullback(morphism, g)));
    PiecewisePoly rhs = pw_mul(pushforward(morphism, f), g);
    return pw_equal(lhs, rhs);
}

Polynomial random_polynomial(int nvars, int max_degree, std::mt19937_64& rng)
{
    Polynomial p(nvars);
    int terms = 2 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        Polynomial::Monomial m(nvars, 0);
        int deg = static_cast<int>(rng() % (max_degree + 1));
        for (int d = 0; d < deg; ++d) {
            m[rng() % nvars] += 1;
        }
        long long num = static_cast<long long>(rng() % 13) - 6;
        long long den = 1 + static_cast<long long>(rng() % 3);
        p.add_term(m, Rational(Integer(num), Integer(den)));
    }
    return p;
}

} // namespace torell
