#include <doctest.h>

#include <numeric>

#include "pel/lfunction.hpp"

using namespace pel;

namespace {

Integer egcd_inverse(const Integer& a, const Integer& m) {
    Integer inv;
    REQUIRE(mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) != 0);
    return inv;
}

} // namespace

TEST_CASE("CZpPoint validation") {
    CHECK_THROWS_AS(CZpPoint(Integer(1), 3, 5), domain_error);  // p does not divide m
    CHECK_THROWS_AS(CZpPoint(Integer(5), 15, 5), domain_error); // p | a
    CZpPoint ok(Integer(2), 15, 5);
    CHECK(ok.to_rational() == Rational(2, 15));
}

TEST_CASE("hurwitz_euler_zeta at s = 1 is 1") {
    PadicContext ctx = make_context(5, 6);
    auto s1 = PadicNumber::from_integer(1, ctx);
    for (long a : {1L, 2L, 4L, 7L}) {
        auto v = hurwitz_euler_zeta(s1, CZpPoint(Integer(a), 15, 5), ctx);
        CHECK((v - PadicNumber::from_integer(1, ctx)).is_zero_mod(6));
    }
}

TEST_CASE("hurwitz_euler_zeta at negative integers: omega_v^{-k}(x) E_k(x)") {
    for (long p : {3L, 5L, 7L}) {
        PadicContext ctx = make_context(p, 6);
        long m = 3 * p;
        for (long k : {1L, 2L, 3L, 5L}) {
            auto s = PadicNumber::from_integer(1 - k, ctx);
            for (long a = 1; a < m; ++a) {
                if (a % p == 0)
                    continue;
                CZpPoint x(Integer(a), m, p);
                auto lhs = hurwitz_euler_zeta(s, x, ctx);
                auto [angle, omega_v] = angle_omega_v(x.to_rational(), ctx);
                auto ek = PadicNumber::from_rational(
                    euler_polynomial(static_cast<int>(k))(x.to_rational()), ctx);
                auto rhs = ek / omega_v.pow(k);
                CHECK((lhs - rhs).is_zero_mod(ctx.target_precision));
            }
        }
    }
}

TEST_CASE("hurwitz_euler_zeta at positive integers: fermionic partial sums") {
    long m = 15;
    for (long k : {1L, 2L}) {
        // the 1/(x+j)^k values have valuation -k, so work at a raised target
        // to certify the comparison mod p^6 after the omega_v^k factor
        PadicContext ctx(5, 6 + 2 * static_cast<int>(k), 2);
        for (long a : {1L, 2L, 7L}) {
            CZpPoint x(Integer(a), m, 5);
            auto s = PadicNumber::from_integer(k + 1, ctx);
            auto lhs = hurwitz_euler_zeta(s, x, ctx);

            // omega_v^k(x) * I_{-1}((x + j)^{-k}) via the partial-sum engine
            auto integral = integrate_zp_limit(
                IntegrandSpec::twisted_power(DirichletCharacter::trivial(), -k,
                                             x.to_rational()),
                ctx);
            auto [angle, omega_v] = angle_omega_v(x.to_rational(), ctx);
            auto rhs = omega_v.pow(k) * integral.value;
            CHECK((lhs - rhs).is_zero_mod(6));
        }
    }
}

TEST_CASE("lp_eval worked examples at p = 5") {
    PadicContext ctx = make_context(5, 6);
    auto quad3 = quadratic_character(3);

    // odd quadratic character at s=1: -4
    auto v1 = lp_eval(quad3, PadicNumber::from_integer(1, ctx), ctx);
    CHECK((v1 - PadicNumber::from_integer(-4, ctx)).is_zero_mod(6));

    // trivial (even) character: identically zero
    for (long s0 : {0L, 1L, 3L, 12L}) {
        auto z = lp_eval(DirichletCharacter::trivial(),
                         PadicNumber::from_integer(s0, ctx), ctx);
        CHECK(z.is_zero_mod(6));
        auto z2 = zeta_p_euler(PadicNumber::from_integer(s0, ctx), ctx);
        CHECK(z2.is_zero_mod(6));
    }

    // interpolation cross-check at s = 1-k
    for (long k : {1L, 2L, 3L}) {
        auto series = lp_eval(quad3, PadicNumber::from_integer(1 - k, ctx), ctx);
        auto closed = lp_neg_closed(quad3, k, ctx);
        CHECK((series - closed).is_zero_mod(5));
    }

    // domain: s outside Z_p
    CHECK_THROWS_AS(
        lp_eval(quad3, PadicNumber::from_rational(Rational(1, 5), ctx), ctx),
        domain_error);

    // non-embeddable character (order 3 at p = 5)
    for (const auto& chi : characters_mod(7))
        if (chi.order() == 3)
            CHECK_THROWS_AS(
                lp_eval(chi, PadicNumber::from_integer(0, ctx), ctx),
                domain_error);
}

TEST_CASE("lp_neg_closed worked case quad:3, p=5, k=1") {
    PadicContext ctx = make_context(5, 6);
    auto quad3 = quadratic_character(3);

    // chi_1 = chi omega^{-1} has conductor 15, so chi_1(5) = 0 and
    // L(chi, 0) = E_{1,chi_1}
    auto chi1 = to_primitive(char_times_omega(quad3, -1, ctx));
    CHECK(chi1.conductor() == 15);
    CHECK(chi1.order() == 4);
    auto expected = embed_padic(gen_euler_number(chi1, 1, 15).value, ctx);
    auto closed = lp_neg_closed(quad3, 1, ctx);
    CHECK((closed - expected).is_zero_mod(6));

    CHECK_THROWS_AS(lp_neg_closed(DirichletCharacter::trivial(), 1, ctx),
                    domain_error);
    CHECK_THROWS_AS(lp_neg_closed(quad3, 0, ctx), domain_error);
}

TEST_CASE("lp_at_one") {
    PadicContext ctx = make_context(5, 6);
    auto quad3 = quadratic_character(3);

    auto v = lp_at_one(quad3, ctx);
    CHECK((v - PadicNumber::from_integer(-4, ctx)).is_zero_mod(6));

    // equals (1 - chi(p)) E_{0,chi} for odd chi
    auto e0 = embed_padic(gen_euler_number(quad3, 0, 15).value, ctx);
    auto chi_p = embed_padic(quad3(5), ctx);
    auto rhs = (PadicNumber::from_integer(1, ctx) - chi_p) * e0;
    CHECK((v - rhs).is_zero_mod(6));

    // even nontrivial character: zero
    auto quad5 = quadratic_character(5);
    CHECK(lp_at_one(quad5, ctx).is_zero_mod(6));

    CHECK_THROWS_AS(lp_at_one(DirichletCharacter::trivial(), ctx), domain_error);
}

TEST_CASE("lp_pos_limit stabilizes to the series value (p = 3, cheap)") {
    PadicContext ctx = make_context(3, 5);
    auto quad3 = quadratic_character(3); // = omega at p = 3
    auto lim = lp_pos_limit(quad3, 1, 0, ctx);
    auto direct = lp_eval(quad3, PadicNumber::from_integer(2, ctx), ctx);
    CHECK((lim.value - direct).is_zero_mod(4));
    CHECK(!lim.trace.empty());

    CHECK_THROWS_AS(lp_pos_limit(quad3, 0, 0, ctx), domain_error);
}

TEST_CASE("lp_pos_limit with negative k reaches L at non-positive integers") {
    PadicContext ctx = make_context(5, 6);
    auto quad3 = quadratic_character(3);
    for (long k : {-1L, -2L}) {
        auto lim = lp_pos_limit(quad3, k, 0, ctx);
        auto direct = lp_eval(quad3, PadicNumber::from_integer(k + 1, ctx), ctx);
        CHECK((lim.value - direct).is_zero_mod(5));
    }
}

TEST_CASE("chi_euler_number routes and parity") {
    PadicContext ctx = make_context(5, 6);
    auto quad3 = quadratic_character(3);

    // k=2: (1 - 5^2 chi(5)) E_{2,chi} with chi(5) = chi(2) = -1
    auto v2 = chi_euler_number(2, quad3, ctx);
    auto e2 = embed_padic(gen_euler_number(quad3, 2, 15).value, ctx);
    auto expected = PadicNumber::from_integer(26, ctx) * e2;
    CHECK((v2 - expected).is_zero_mod(6));

    // parity: chi odd, k odd -> 0
    auto v1 = chi_euler_number(1, quad3, ctx);
    CHECK(v1.is_zero_mod(6));

    // negative k goes through the series; integrality holds
    for (long k = -3; k <= 4; ++k) {
        auto v = chi_euler_number(k, quad3, ctx);
        if (!v.is_exact_zero())
            CHECK(v.valuation() >= 0);
    }

    // limit route agreement, precision-matched: mod p^r for r = 1, 2
    auto closed = chi_euler_number(2, quad3, ctx);
    auto trace = chi_euler_limit_trace(2, quad3, 2, ctx);
    REQUIRE(trace.size() == 2);
    CHECK((closed - trace[0]).is_zero_mod(1));
    CHECK((closed - trace[1]).is_zero_mod(2));
}

TEST_CASE("h_sum brute force oracle (quad:3, p=5, n=1)") {
    PadicContext ctx = make_context(5, 6);
    auto quad3 = quadratic_character(3);

    auto v = h_sum(1, quad3, ctx);

    // independent 8-term computation
    Integer mod = ctx.working_modulus();
    Integer acc(0);
    for (long a = 0; a < 15; ++a) {
        if (a % 5 == 0 || a % 3 == 0)
            continue;
        long chi = (a % 3 == 1) ? 1 : -1;
        Integer term = egcd_inverse(Integer(a), mod);
        if (chi < 0)
            term = mod - term;
        if (a % 2 != 0)
            term = mod - term;
        acc = (acc + term) % mod;
    }
    CHECK(v.residue_mod(6) == acc % Integer(5 * 5 * 5 * 5 * 5 * 5));

    CHECK_THROWS_AS(h_sum(0, quad3, ctx), domain_error);
}

TEST_CASE("H-series route matches the chi-Euler number") {
    PadicContext ctx = make_context(5, 6);

    // k=2 needs chi odd: quad:3
    auto quad3 = quadratic_character(3);
    auto series = chi_euler_h_series(2, quad3, ctx);
    auto direct = chi_euler_number(-2, quad3, ctx);
    CHECK((series - direct).is_zero_mod(5));

    // k=1 needs chi even: quad:5
    auto quad5 = quadratic_character(5);
    auto series1 = chi_euler_h_series(1, quad5, ctx);
    auto direct1 = chi_euler_number(-1, quad5, ctx);
    CHECK((series1 - direct1).is_zero_mod(5));
}

TEST_CASE("analyticity evidence: continuity in s") {
    PadicContext ctx = make_context(5, 6);
    auto quad3 = quadratic_character(3);
    auto base = lp_eval(quad3, PadicNumber::from_integer(2, ctx), ctx);
    for (int j = 1; j <= 3; ++j) {
        Rational s = Rational(2) + rational_pow(Rational(5), j);
        auto shifted = lp_eval(quad3, PadicNumber::from_rational(s, ctx), ctx);
        CHECK((base - shifted).is_zero_mod(std::min(6, j + 1)));
    }
}
