#pragma once

#include <vector>

#include "pel/rational.hpp"

namespace pel {

// Element of Q(zeta_d), carried as a residue modulo the d-th cyclotomic
// polynomial Phi_d: a coefficient vector of length phi(d) over Q. This is
// the value domain of Dirichlet characters and of the generalized Euler
// numbers E_{n,chi}; all arithmetic is exact.
class CyclotomicElement {
public:
    // Zero in Q(zeta_d).
    explicit CyclotomicElement(long d);
    CyclotomicElement(long d, std::vector<Rational> coeffs);

    static CyclotomicElement from_rational(long d, const Rational& c);
    // zeta_d^e (e may be any integer; reduced mod d).
    static CyclotomicElement root_of_unity(long d, long e);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Throws domain_error when the element has nonzero zeta-components.
    Rational to_rational() const;

    CyclotomicElement operator+(const CyclotomicElement& rhs) const;
    CyclotomicElement operator-(const CyclotomicElement& rhs) const;
    CyclotomicElement operator*(const CyclotomicElement& rhs) const;
    CyclotomicElement operator-() const;
    CyclotomicElement scaled(const Rational& c) const;
    CyclotomicElement pow(long e) const; // e >= 0

    bool operator==(const CyclotomicElement& rhs) const;

    // Image under zeta_d -> zeta_D^{D/d} in Q(zeta_D); requires d | D.
    CyclotomicElement raised_to_order(long D) const;

private:
    long order_;
    std::vector<Rational> coeffs_; // length phi(order_)
};

// Coefficients of Phi_d (monic, integer), lowest degree first; memoized.
const std::vector<Integer>& cyclotomic_polynomial(long d);

// "3/2 - z^2 + ..." with z = zeta_order; for diagnostics and table output.
std::string to_string(const CyclotomicElement& v);

} // namespace pel
