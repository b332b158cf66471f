#include "torell/fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace torell {

namespace {

Integer det_big(const std::vector<std::vector<Integer>>& m)
{
    const size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return m[0][0];
    }
    Integer acc = 0;
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        std::vector<std::vector<Integer>> minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<Integer> row;
            row.reserve(n - 1);
            for (size_t j = 0; j < n; ++j) {
                if (j != k) {
                    row.push_back(m[i][j]);
                }
            }
            minor.push_back(std::move(row));
        }
        acc += sign * m[0][k] * det_big(minor);
        sign = -sign;
    }
    return acc;
}

std::vector<std::vector<Integer>> to_big(const std::vector<std::vector<long long>>& m)
{
    std::vector<std::vector<Integer>> r(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        r[i].assign(m[i].begin(), m[i].end());
    }
    return r;
}

// Generator matrix of a maximal cone, columns = ray vectors.
std::vector<std::vector<long long>> generator_matrix(const Fan& fan, int cone)
{
    const auto& idx = fan.max_cones.at(cone);
    std::vector<std::vector<long long>> m(fan.dim, std::vector<long long>(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j) {
        const auto& ray = fan.rays.at(idx[j]);
        for (int i = 0; i < fan.dim; ++i) {
            m[i][j] = ray[i];
        }
    }
    return m;
}

long long gcd_abs(const std::vector<long long>& v)
{
    long long g = 0;
    for (long long x : v) {
        g = std::gcd(g, x < 0 ? -x : x);
    }
    return g;
}

// Primitive kernel vector of an (n-1)-row integer system, or empty if the
// rank is deficient.
std::vector<long long> kernel_vector(const std::vector<std::vector<long long>>& rows, int n)
{
    std::vector<std::vector<Rational>> a;
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (long long x : r) {
            row.emplace_back(Integer(x));
        }
        a.push_back(std::move(row));
    }
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (int col = 0; col < n && rank < a.size(); ++col) {
        size_t sel = a.size();
        for (size_t i = rank; i < a.size(); ++i) {
            if (a[i][col] != Rational(0)) {
                sel = i;
                break;
            }
        }
        if (sel == a.size()) {
            continue;
        }
        std::swap(a[rank], a[sel]);
        for (size_t i = 0; i < a.size(); ++i) {
            if (i != rank && a[i][col] != Rational(0)) {
                Rational f = a[i][col] / a[rank][col];
                for (int j = 0; j < n; ++j) {
                    a[i][j] -= f * a[rank][j];
                }
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank != rows.size()) {
        return {};
    }
    // Free column -> kernel vector.
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) {
        is_pivot[c] = true;
    }
    int free_col = -1;
    for (int c = 0; c < n; ++c) {
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    }
    std::vector<Rational> v(n, Rational(0));
    v[free_col] = Rational(1);
    for (size_t i = 0; i < rank; ++i) {
        v[pivot_col[i]] = -a[i][free_col] / a[i][pivot_col[i]];
    }
    Integer lcm = 1;
    for (const auto& x : v) {
        lcm = boost::multiprecision::lcm(lcm, x.denominator());
    }
    std::vector<long long> w(n);
    for (int i = 0; i < n; ++i) {
        w[i] = static_cast<long long>((v[i].numerator() * (lcm / v[i].denominator())).convert_to<long long>());
    }
    long long g = gcd_abs(w);
    if (g > 1) {
        for (auto& x : w) {
            x /= g;
        }
    }
    return w;
}

long long apply_form(const std::vector<long long>& form, const std::vector<long long>& v)
{
    long long s = 0;
    for (size_t i = 0; i < form.size(); ++i) {
        s += form[i] * v[i];
    }
    return s;
}

// Extreme rays of {x : f(x) >= 0 for all f in constraints}, assuming the
// cone is pointed.  Enumerates (n-1)-subsets of active constraints.
std::vector<std::vector<long long>> extreme_rays(
    const std::vector<std::vector<long long>>& constraints, int n)
{
    std::vector<std::vector<long long>> result;
    const int m = static_cast<int>(constraints.size());

    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int start, int need) -> void {
        if (need == 0) {
            subsets.push_back(cur);
            return;
        }
        for (int i = start; i <= m - need; ++i) {
            cur.push_back(i);
            self(self, i + 1, need - 1);
            cur.pop_back();
        }
    };
    gen(gen, 0, n - 1);

    auto in_cone = [&](const std::vector<long long>& w) {
        for (const auto& f : constraints) {
            if (apply_form(f, w) < 0) {
                return false;
            }
        }
        return true;
    };
    std::set<std::vector<long long>> seen;
    for (const auto& s : subsets) {
        std::vector<std::vector<long long>> rows;
        for (int i : s) {
            rows.push_back(constraints[i]);
        }
        auto w = kernel_vector(rows, n);
        if (w.empty()) {
            continue;
        }
        for (int sign : {1, -1}) {
            std::vector<long long> c(w);
            for (auto& x : c) {
                x *= sign;
            }
            if (in_cone(c) && gcd_abs(c) != 0 && seen.insert(c).second) {
                result.push_back(c);
            }
        }
    }
    return result;
}

} // namespace

long long det(const std::vector<std::vector<long long>>& m)
{
    return det_big(to_big(m)).convert_to<long long>();
}

std::vector<std::string> validate(const Fan& fan)
{
    std::vector<std::string> diag;
    if (fan.dim <= 0) {
        diag.push_back("dimension must be positive");
        return diag;
    }
    for (size_t i = 0; i < fan.rays.size(); ++i) {
        if (static_cast<int>(fan.rays[i].size()) != fan.dim) {
            diag.push_back("ray " + std::to_string(i) + " has wrong dimension");
            return diag;
        }
        long long g = gcd_abs(fan.rays[i]);
        if (g == 0) {
            diag.push_back("ray " + std::to_string(i) + " is zero");
        } else if (g != 1) {
            diag.push_back("ray " + std::to_string(i) + " not primitive");
        }
    }
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& cone = fan.max_cones[c];
        if (static_cast<int>(cone.size()) != fan.dim) {
            diag.push_back("cone " + std::to_string(c) + " is not full-dimensional");
            continue;
        }
        for (int r : cone) {
            if (r < 0 || r >= static_cast<int>(fan.rays.size())) {
                diag.push_back("cone " + std::to_string(c) + " references missing ray");
                return diag;
            }
        }
        long long d = det(generator_matrix(fan, static_cast<int>(c)));
        if (d != 1 && d != -1) {
            diag.push_back("cone " + std::to_string(c) + " not smooth, |det| = " +
                           std::to_string(d < 0 ? -d : d));
        }
    }
    if (!diag.empty()) {
        return diag;
    }
    // Pairwise face condition: the set-theoretic intersection of two cones
    // must be spanned by their common rays.
    for (size_t a = 0; a < fan.max_cones.size(); ++a) {
        DualFrame fa = dual_frame(fan, static_cast<int>(a));
        for (size_t b = a + 1; b < fan.max_cones.size(); ++b) {
            DualFrame fb = dual_frame(fan, static_cast<int>(b));
            std::vector<std::vector<long long>> constraints = fa.forms;
            constraints.insert(constraints.end(), fb.forms.begin(), fb.forms.end());
            auto rays = extreme_rays(constraints, fan.dim);
            std::set<int> common;
            for (int r : fan.max_cones[a]) {
                if (std::find(fan.max_cones[b].begin(), fan.max_cones[b].end(), r) !=
                    fan.max_cones[b].end()) {
                    common.insert(r);
                }
            }
            for (const auto& w : rays) {
                bool ok = true;
                for (size_t j = 0; j < fa.forms.size(); ++j) {
                    long long coeff = apply_form(fa.forms[j], w);
                    int ray_idx = fan.max_cones[a][j];
                    if (coeff != 0 && common.find(ray_idx) == common.end()) {
                        ok = false;
                    }
                }
                if (!ok) {
                    diag.push_back("cones " + std::to_string(a) + " and " + std::to_string(b) +
                                   " do not intersect in a common face");
                    break;
                }
            }
        }
    }
    return diag;
}

DualFrame dual_frame(const Fan& fan, int cone)
{
    auto m = to_big(generator_matrix(fan, cone));
    const int n = fan.dim;
    Integer d = det_big(m);
    if (d != 1 && d != -1) {
        throw std::invalid_argument("cone generator matrix is not unimodular");
    }
    DualFrame frame;
    frame.cone = cone;
    frame.forms.assign(n, std::vector<long long>(n));
    // Rows of M^{-1} via the adjugate; entries are integers since det = +-1.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<std::vector<Integer>> minor;
            for (int r = 0; r < n; ++r) {
                if (r == j) {
                    continue;
                }
                std::vector<Integer> row;
                for (int c = 0; c < n; ++c) {
                    if (c != i) {
                        row.push_back(m[r][c]);
                    }
                }
                minor.push_back(std::move(row));
            }
            Integer cof = det_big(minor);
            if ((i + j) % 2 != 0) {
                cof = -cof;
            }
            frame.forms[i][j] = (cof / d).convert_to<long long>();
        }
    }
    return frame;
}

bool cone_contains(const Fan& fan, int cone, const std::vector<long long>& point)
{
    DualFrame f = dual_frame(fan, cone);
    for (const auto& form : f.forms) {
        if (apply_form(form, point) < 0) {
            return false;
        }
    }
    return true;
}

Fan star_subdivide(const Fan& fan, const std::vector<int>& cone)
{
    if (cone.empty()) {
        throw std::invalid_argument("empty cone");
    }
    std::vector<int> face = cone;
    std::sort(face.begin(), face.end());
    bool found = false;
    for (const auto& mc : fan.max_cones) {
        std::vector<int> s = mc;
        std::sort(s.begin(), s.end());
        if (std::includes(s.begin(), s.end(), face.begin(), face.end())) {
            found = true;
            break;
        }
    }
    if (!found) {
        throw std::invalid_argument("cone not in fan");
    }
    if (face.size() == 1) {
        return fan; // the new ray is the ray itself
    }
    Fan out = fan;
    std::vector<long long> new_ray(fan.dim, 0);
    for (int r : face) {
        for (int i = 0; i < fan.dim; ++i) {
            new_ray[i] += fan.rays[r][i];
        }
    }
    int new_idx = static_cast<int>(out.rays.size());
    out.rays.push_back(new_ray);
    std::vector<std::vector<int>> cones;
    for (const auto& mc : fan.max_cones) {
        std::vector<int> s = mc;
        std::sort(s.begin(), s.end());
        if (!std::includes(s.begin(), s.end(), face.begin(), face.end())) {
            cones.push_back(mc);
            continue;
        }
        for (int drop : face) {
            std::vector<int> child;
            for (int r : mc) {
                child.push_back(r == drop ? new_idx : r);
            }
            cones.push_back(child);
        }
    }
    out.max_cones = std::move(cones);
    return out;
}

FanMorphism refinement_morphism(const Fan& fine, const Fan& coarse)
{
    if (fine.dim != coarse.dim) {
        throw std::invalid_argument("refinement must preserve dimension");
    }
    FanMorphism m;
    m.source = fine;
    m.target = coarse;
    m.lattice_map.assign(fine.dim, std::vector<long long>(fine.dim, 0));
    for (int i = 0; i < fine.dim; ++i) {
        m.lattice_map[i][i] = 1;
    }
    for (size_t c = 0; c < fine.max_cones.size(); ++c) {
        std::vector<long long> interior(fine.dim, 0);
        for (int r : fine.max_cones[c]) {
            for (int i = 0; i < fine.dim; ++i) {
                interior[i] += fine.rays[r][i];
            }
        }
        int assigned = -1;
        for (size_t t = 0; t < coarse.max_cones.size(); ++t) {
            bool all_in = true;
            for (int r : fine.max_cones[c]) {
                if (!cone_contains(coarse, static_cast<int>(t), fine.rays[r])) {
                    all_in = false;
                    break;
                }
            }
            if (all_in && cone_contains(coarse, static_cast<int>(t), interior)) {
                assigned = static_cast<int>(t);
                break;
            }
        }
        if (assigned < 0) {
            throw std::invalid_argument("fine cone " + std::to_string(c) +
                                        " straddles coarse cones");
        }
        m.cone_assignment.push_back(assigned);
    }
    return m;
}

FanMorphism identity_morphism(const Fan& fan)
{
    FanMorphism m;
    m.source = fan;
    m.target = fan;
    m.lattice_map.assign(fan.dim, std::vector<long long>(fan.dim, 0));
    for (int i = 0; i < fan.dim; ++i) {
        m.lattice_map[i][i] = 1;
    }
    m.cone_assignment.resize(fan.max_cones.size());
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        m.cone_assignment[c] = static_cast<int>(c);
    }
    return m;
}

AleFan ale_fan(int n)
{
    if (n < 1) {
        throw std::invalid_argument("ale_fan requires n >= 1");
    }
    AleFan a;
    a.fan.dim = 2;
    for (int k = 0; k <= n; ++k) {
        a.fan.rays.push_back({k, 1});
    }
    for (int k = 0; k < n; ++k) {
        a.fan.max_cones.push_back({k, k + 1});
    }
    a.weight_substitution = {{n, 0}, {1, 1}};
    return a;
}

std::vector<std::vector<long long>> cone_weights(
    const Fan& fan, int cone, const std::vector<std::vector<long long>>* substitution)
{
    DualFrame f = dual_frame(fan, cone);
    if (substitution == nullptr) {
        return f.forms;
    }
    const auto& s = *substitution;
    std::vector<std::vector<long long>> out(f.forms.size(),
                                            std::vector<long long>(fan.dim, 0));
    for (size_t i = 0; i < f.forms.size(); ++i) {
        for (int j = 0; j < fan.dim; ++j) {
            for (int k = 0; k < fan.dim; ++k) {
                out[i][j] += f.forms[i][k] * s[k][j];
            }
        }
    }
    return out;
}

} // namespace torell
