#ifndef TORELL_POLYNOMIAL_HPP
#define TORELL_POLYNOMIAL_HPP

#include "torell/rational.hpp"

#include <complex>
#include <map>
#include <optional>
#include <vector>

namespace torell {

/// Multivariate polynomial in n variables with exact rational coefficients.
/// Terms are kept in lexicographic exponent order; zero coefficients are
/// never stored.
class Polynomial {
public:
    using Monomial = std::vector<int>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c);
    /// The variable u_i as a polynomial.
    static Polynomial variable(int nvars, int i);
    /// The linear form sum_i coeffs[i] * u_i.
    static Polynomial linear_form(const std::vector<Rational>& coeffs);
    static Polynomial linear_form(const std::vector<long long>& coeffs);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Rational eval(const std::vector<Rational>& point) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

    /// Substitutes u_i -> subs[i]; all subs must share a variable count.
    Polynomial substitute(const std::vector<Polynomial>& subs) const;

    /// Exact quotient this/divisor, or nullopt if the division leaves a
    /// remainder.  Single-divisor reduction in lex order; the remainder
    /// vanishes exactly when divisor | this.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

private:
    int nvars_ = 0;
    std::map<Monomial, Rational> terms_;
};

} // namespace torell

#endif
