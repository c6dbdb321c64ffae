#pragma once

#include <vector>

#include "pel/rational.hpp"

namespace pel {

// Dense univariate polynomial with exact rational coefficients,
// index = degree. Normalized: the leading coefficient is nonzero unless the
// polynomial is zero (empty coefficient vector).
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    static RationalPolynomial constant(const Rational& c);
    static RationalPolynomial monomial(int degree, const Rational& c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int i) const;

    // Horner evaluation; exact.
    Rational operator()(const Rational& x) const;

    RationalPolynomial operator+(const RationalPolynomial& rhs) const;
    RationalPolynomial operator-(const RationalPolynomial& rhs) const;
    RationalPolynomial operator*(const RationalPolynomial& rhs) const;
    RationalPolynomial scaled(const Rational& c) const;

    bool operator==(const RationalPolynomial& rhs) const = default;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

// Exact evaluation of P at x (Horner).
Rational eval_poly(const RationalPolynomial& P, const Rational& x);

// Euler polynomial E_n(x): coefficients of 2e^{xt}/(e^t + 1), computed by the
// recurrence E_n(x) = x^n - (1/2) sum_{k<n} binom(n,k) E_k(x) and memoized.
// Results are shared; the cache is guarded by a mutex.
const RationalPolynomial& euler_polynomial(int n);

// Euler number E_n = E_n(0). These are the "second kind" values
// (E_0 = 1, E_1 = -1/2, E_3 = 1/4, ..., E_{2k} = 0), not the secant numbers.
Rational euler_number(int n);

} // namespace pel
