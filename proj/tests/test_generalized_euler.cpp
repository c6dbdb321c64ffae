#include <doctest.h>

#include "pel/generalized_euler.hpp"

using namespace pel;

TEST_CASE("gen_euler_number worked examples") {
    auto quad3 = quadratic_character(3);

    // E_{0,chi} = -chi(1) + chi(2) = -2
    CHECK(gen_euler_number(quad3, 0, 3).value.to_rational() == -2);

    // trivial character, N = 1: single term (-1)^1 E_0(1) = -1
    auto trivial = DirichletCharacter::trivial();
    CHECK(gen_euler_number(trivial, 0, 1).value.to_rational() == -1);

    // N-independence
    auto a = gen_euler_number(quad3, 2, 3).value;
    auto b = gen_euler_number(quad3, 2, 9).value;
    CHECK(a == b);

    CHECK_THROWS_AS(gen_euler_number(quad3, 2, 6), domain_error);  // even N
    CHECK_THROWS_AS(gen_euler_number(quad3, 2, 5), domain_error);  // not multiple
    CHECK_THROWS_AS(gen_euler_number(quad3, -1, 3), domain_error);
    // even modulus is rejected outright
    auto mod8 = characters_mod(8)[1];
    CHECK_THROWS_AS(gen_euler_number(mod8, 0, 8), domain_error);
}

TEST_CASE("N-independence across spans") {
    for (long f : {1L, 3L, 5L}) {
        auto chis = characters_mod(f);
        for (const auto& chi : chis) {
            if (f > 1 && !chi.is_primitive())
                continue;
            long base = f;
            for (long n = 0; n <= 10; ++n) {
                auto v0 = gen_euler_number(chi, n, base).value;
                for (long mult : {3L, 5L, 7L}) {
                    CHECK(v0 == gen_euler_number(chi, n, mult * base).value);
                }
            }
        }
    }
}

TEST_CASE("parity vanishing (E-0-pro)") {
    for (long f : {3L, 5L, 7L, 9L, 15L}) {
        for (const auto& chi : characters_mod(f)) {
            if (!chi.is_primitive() || chi.is_trivial())
                continue;
            for (long n = 0; n <= 12; ++n) {
                bool vanish = (n % 2) != (chi.parity_delta() % 2);
                CHECK(gen_euler_number(chi, n, f).value.is_zero() == vanish);
            }
        }
    }
}

TEST_CASE("gen_euler_poly") {
    auto quad3 = quadratic_character(3);

    for (long n = 0; n <= 5; ++n)
        CHECK(gen_euler_poly(quad3, n, Rational(0), 3) ==
              gen_euler_number(quad3, n, 3).value);

    CHECK(gen_euler_poly(quad3, 0, Rational(22, 7), 3) ==
          gen_euler_number(quad3, 0, 3).value);

    auto e1 = gen_euler_number(quad3, 1, 3).value;
    auto e0 = gen_euler_number(quad3, 0, 3).value;
    CHECK(gen_euler_poly(quad3, 1, Rational(1), 3) == e1 + e0);
}

TEST_CASE("alt_power_sum (E-sum-ex)") {
    auto quad3 = quadratic_character(3);
    auto trivial = DirichletCharacter::trivial();

    // n=0, x=0, N=3: -chi(1) + chi(2) = -2; rhs (E_0 + E_0)/2 = E_0 = -2
    CHECK(alt_power_sum(quad3, 0, Rational(0), 3).to_rational() == -2);

    // trivial chi, N=1, n=1, x=0: single r=0 term 0^1 = 0
    CHECK(alt_power_sum(trivial, 1, Rational(0), 1).is_zero());

    // n=3, x=1/2, N=9 vs the polynomial route
    auto lhs = alt_power_sum(quad3, 3, Rational(1, 2), 9);
    auto rhs = (gen_euler_poly(quad3, 3, Rational(1, 2), 9) +
                gen_euler_poly(quad3, 3, Rational(19, 2), 9))
                   .scaled(Rational(1, 2));
    CHECK(lhs == rhs);

    // identity across characters, n, x, N
    for (const auto& chi :
         {quad3, characters_mod(5)[1], quadratic_character(7)}) {
        long f = chi.modulus();
        for (long n = 0; n <= 10; ++n) {
            for (const Rational& x : {Rational(0), Rational(1, 2), Rational(2)}) {
                for (long N : {f, 3 * f, 5 * f}) {
                    auto l = alt_power_sum(chi, n, x, N);
                    auto r = (gen_euler_poly(chi, n, x, N) +
                              gen_euler_poly(chi, n, x + N, N))
                                 .scaled(Rational(1, 2));
                    CHECK(l == r);
                }
            }
        }
    }
}

TEST_CASE("coefficient denominators are 2-powers") {
    for (long f : {3L, 5L, 15L}) {
        for (const auto& chi : characters_mod(f)) {
            if (!chi.is_primitive() || chi.is_trivial())
                continue;
            for (long n = 0; n <= 8; ++n) {
                auto v = gen_euler_number(chi, n, f).value;
                for (const auto& c : v.coeffs()) {
                    Integer den = c.get_den();
                    while (den % 2 == 0)
                        den /= 2;
                    CHECK(den == 1);
                }
            }
        }
    }
}
