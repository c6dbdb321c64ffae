#include <doctest.h>

#include "pel/euler.hpp"

using namespace pel;

namespace {

// P(x + c), expanded test-side via binomials
RationalPolynomial shifted(const RationalPolynomial& P, const Rational& c) {
    int n = P.degree();
    std::vector<Rational> out(n + 1, Rational(0));
    for (int j = 0; j <= n; ++j) {
        // x^j -> sum_i binom(j,i) c^{j-i} x^i
        Rational cj = P.coefficient(j);
        if (cj == 0)
            continue;
        Rational cpow(1);
        for (int i = j; i >= 0; --i) {
            Integer b;
            mpz_bin_uiui(b.get_mpz_t(), j, i);
            out[i] += cj * Rational(b) * cpow;
            cpow *= c;
        }
    }
    return RationalPolynomial(std::move(out));
}

// P(-x)
RationalPolynomial reflected(const RationalPolynomial& P) {
    std::vector<Rational> out;
    for (int j = 0; j <= P.degree(); ++j)
        out.push_back(j % 2 == 0 ? P.coefficient(j) : -P.coefficient(j));
    return RationalPolynomial(std::move(out));
}

} // namespace

TEST_CASE("polynomial basics") {
    RationalPolynomial z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z(Rational(3)) == 0);

    auto p = RationalPolynomial({Rational(1), Rational(0), Rational(-2)});
    CHECK(p.degree() == 2);
    CHECK(p(Rational(3)) == 1 - 2 * 9);
    CHECK(eval_poly(p, Rational(1, 2)) == Rational(1) - Rational(1, 2));

    // trailing zeros are trimmed
    auto q = RationalPolynomial({Rational(1), Rational(0), Rational(0)});
    CHECK(q.degree() == 0);
}

TEST_CASE("euler polynomial small cases") {
    CHECK(euler_polynomial(0) == RationalPolynomial::constant(Rational(1)));
    CHECK(euler_polynomial(1) ==
          RationalPolynomial({Rational(-1, 2), Rational(1)}));
    CHECK(euler_polynomial(2) ==
          RationalPolynomial({Rational(0), Rational(-1), Rational(1)}));
    CHECK(euler_polynomial(1)(Rational(1, 2)) == 0);
    CHECK(euler_polynomial(9)(Rational(0)) == Rational(-31, 2));
    CHECK_THROWS_AS(euler_polynomial(-1), domain_error);
}

TEST_CASE("euler number table") {
    CHECK(euler_number(0) == 1);
    CHECK(euler_number(1) == Rational(-1, 2));
    CHECK(euler_number(3) == Rational(1, 4));
    CHECK(euler_number(5) == Rational(-1, 2));
    CHECK(euler_number(7) == Rational(17, 8));
    CHECK(euler_number(9) == Rational(-31, 2));
    CHECK(euler_number(11) == Rational(691, 4));
    for (int k = 1; k <= 10; ++k)
        CHECK(euler_number(2 * k) == 0);
}

TEST_CASE("complementarity: E_n(x) + E_n(x+1) = 2x^n") {
    for (int n = 0; n <= 20; ++n) {
        auto lhs = euler_polynomial(n) + shifted(euler_polynomial(n), Rational(1));
        CHECK(lhs == RationalPolynomial::monomial(n, Rational(2)));
    }
}

TEST_CASE("reflection: E_n(1-x) = (-1)^n E_n(x)") {
    for (int n = 0; n <= 20; ++n) {
        // E_n(1-x) = reflected(E_n)(x-1) = shifted(reflected(E_n), -1)
        auto lhs = shifted(reflected(euler_polynomial(n)), Rational(-1));
        auto rhs = n % 2 == 0 ? euler_polynomial(n)
                              : euler_polynomial(n).scaled(Rational(-1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("denominators are powers of two") {
    for (int n = 0; n <= 30; ++n) {
        Integer den = euler_number(n).get_den();
        while (den % 2 == 0)
            den /= 2;
        CHECK(den == 1);
    }
}
