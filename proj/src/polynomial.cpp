#include "torell/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace torell {

Polynomial Polynomial::constant(int nvars, const Rational& c)
{
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i)
{
    if (i < 0 || i >= nvars) {
        throw std::invalid_argument("variable index out of range");
    }
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.add_term(m, Rational(1));
    return p;
}

Polynomial Polynomial::linear_form(const std::vector<Rational>& coeffs)
{
    Polynomial p(static_cast<int>(coeffs.size()));
    for (int i = 0; i < p.nvars_; ++i) {
        Monomial m(p.nvars_, 0);
        m[i] = 1;
        p.add_term(m, coeffs[i]);
    }
    return p;
}

Polynomial Polynomial::linear_form(const std::vector<long long>& coeffs)
{
    std::vector<Rational> r;
    r.reserve(coeffs.size());
    for (long long c : coeffs) {
        r.emplace_back(Integer(c));
    }
    return linear_form(r);
}

int Polynomial::total_degree() const
{
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (int e : m) {
            s += e;
        }
        d = std::max(d, s);
    }
    return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (static_cast<int>(m.size()) != nvars_) {
        throw std::invalid_argument("monomial arity mismatch");
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != Rational(0)) {
            terms_.emplace(m, c);
        }
        return;
    }
    it->second += c;
    if (it->second == Rational(0)) {
        terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const
{
    Polynomial p(nvars_);
    for (const auto& [m, c] : terms_) {
        p.terms_.emplace(m, -c);
    }
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    if (nvars_ != o.nvars_) {
        throw std::invalid_argument("polynomial arity mismatch");
    }
    Polynomial p = *this;
    for (const auto& [m, c] : o.terms_) {
        p.add_term(m, c);
    }
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    if (nvars_ != o.nvars_) {
        throw std::invalid_argument("polynomial arity mismatch");
    }
    Polynomial p(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(nvars_);
            for (int i = 0; i < nvars_; ++i) {
                m[i] = ma[i] + mb[i];
            }
            p.add_term(m, ca * cb);
        }
    }
    return p;
}

Polynomial Polynomial::operator*(const Rational& c) const
{
    Polynomial p(nvars_);
    if (c == Rational(0)) {
        return p;
    }
    for (const auto& [m, coeff] : terms_) {
        p.terms_.emplace(m, coeff * c);
    }
    return p;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const
{
    if (static_cast<int>(point.size()) != nvars_) {
        throw std::invalid_argument("evaluation point arity mismatch");
    }
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i) {
            for (int e = 0; e < m[i]; ++e) {
                t *= point[i];
            }
        }
        acc += t;
    }
    return acc;
}

std::complex<double> Polynomial::eval(const std::vector<std::complex<double>>& point) const
{
    if (static_cast<int>(point.size()) != nvars_) {
        throw std::invalid_argument("evaluation point arity mismatch");
    }
    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = to_double(c);
        for (int i = 0; i < nvars_; ++i) {
            for (int e = 0; e < m[i]; ++e) {
                t *= point[i];
            }
        }
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& subs) const
{
    if (static_cast<int>(subs.size()) != nvars_) {
        throw std::invalid_argument("substitution arity mismatch");
    }
    int target_vars = nvars_ == 0 ? 0 : subs[0].nvars();
    for (const auto& s : subs) {
        if (s.nvars() != target_vars) {
            throw std::invalid_argument("substitution polynomials disagree on arity");
        }
    }
    Polynomial acc(target_vars);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target_vars, c);
        for (int i = 0; i < nvars_; ++i) {
            for (int e = 0; e < m[i]; ++e) {
                t = t * subs[i];
            }
        }
        acc = acc + t;
    }
    return acc;
}

namespace {

bool monomial_divides(const Polynomial::Monomial& a, const Polynomial::Monomial& b)
{
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

} // namespace

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const
{
    if (nvars_ != divisor.nvars_) {
        throw std::invalid_argument("polynomial arity mismatch");
    }
    if (divisor.is_zero()) {
        throw std::invalid_argument("division by zero polynomial");
    }
    const auto& lead = *divisor.terms_.rbegin();
    Polynomial rem = *this;
    Polynomial quot(nvars_);
    while (!rem.is_zero()) {
        const auto& [m, c] = *rem.terms_.rbegin();
        if (!monomial_divides(lead.first, m)) {
            return std::nullopt;
        }
        Monomial qm(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            qm[i] = m[i] - lead.first[i];
        }
        Polynomial t(nvars_);
        t.add_term(qm, c / lead.second);
        quot = quot + t;
        rem = rem - t * divisor;
    }
    return quot;
}

} // namespace torell
