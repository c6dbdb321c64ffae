#include "pel/lfunction.hpp"

#include <numeric>

#include "alternating_limit.hpp"

namespace pel {

namespace {

void check_s_domain(const PadicNumber& s) {
    if (s.is_exact_zero())
        return;
    if (s.is_precision_zero())
        throw precision_error("s is indistinguishable from zero");
    if (s.valuation() < 0)
        throw domain_error("s must lie in Z_p (the Q_p form of |s| < R_p)");
}

PadicNumber one(const PadicContext& ctx) {
    return PadicNumber::from_integer(1, ctx);
}

bool provably_below(const PadicNumber& t, long bound) {
    return t.is_exact_zero() || t.valuation() >= bound;
}

// chi made primitive and checked against the p-adic side requirements.
DirichletCharacter admissible(const DirichletCharacter& chi, const PadicContext& ctx) {
    DirichletCharacter prim = to_primitive(chi);
    if (prim.conductor() % 2 == 0)
        throw domain_error("character has even conductor; the generalized Euler "
                           "machinery requires odd conductor");
    if ((ctx.p - 1) % prim.order() != 0)
        throw domain_error("character order does not divide p-1; values are not "
                           "representable in Z_p");
    return prim;
}

} // namespace

CZpPoint::CZpPoint(Integer a_, long m_, long p) : a(std::move(a_)), m(m_) {
    if (m < 1 || m % p != 0)
        throw domain_error("CZpPoint: m must be a positive multiple of p");
    if (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p)))
        throw domain_error("CZpPoint: p must not divide a (a/m must be outside Z_p)");
}

LValueRequest::LValueRequest(const DirichletCharacter& chi_, PadicNumber s_,
                             const PadicContext& ctx_)
    : chi(admissible(chi_, ctx_)), s(std::move(s_)), ctx(ctx_),
      m(std::lcm(chi.modulus(), ctx_.p)) {
    check_s_domain(s);
}

PadicNumber hurwitz_euler_zeta(const PadicNumber& s, const CZpPoint& x,
                               const PadicContext& ctx) {
    check_s_domain(s);
    const long w = ctx.working_precision();

    auto [angle, omega_v] = angle_omega_v(x.to_rational(), ctx);
    PadicNumber one_minus_s = one(ctx) - s;
    PadicNumber prefactor = power_angle(angle, one_minus_s);

    PadicNumber inv_x = PadicNumber::from_rational(Rational(Integer(x.m), x.a), ctx);
    long i_max = series_truncation_bound(ctx.p, static_cast<int>(w));

    PadicNumber acc = PadicNumber::zero(ctx);
    PadicNumber coeff = one(ctx); // binom(1-s, i)
    PadicNumber xpow = one(ctx);  // (m/a)^i
    PadicNumber tail1 = PadicNumber::zero(ctx), tail2 = PadicNumber::zero(ctx);
    bool terminated = false;
    for (long i = 0; i <= i_max; ++i) {
        if (i > 0) {
            coeff = coeff * (one_minus_s - PadicNumber::from_integer(i - 1, ctx))
                          / PadicNumber::from_integer(i, ctx);
            if (coeff.is_exact_zero()) {
                terminated = true; // 1-s a nonnegative integer: finite sum
                break;
            }
            xpow = xpow * inv_x;
        }
        Rational e = euler_number(static_cast<int>(i));
        if (e == 0)
            continue;
        PadicNumber term = coeff * xpow * PadicNumber::from_rational(e, ctx);
        acc = acc + term;
        tail1 = tail2;
        tail2 = term;
    }
    if (!terminated &&
        (!provably_below(tail1, w) || !provably_below(tail2, w)))
        throw convergence_error("hurwitz_euler_zeta: series tail is not provably "
                                "below the working threshold");
    return prefactor * acc;
}

PadicNumber lp_eval(const LValueRequest& req) {
    const PadicContext& ctx = req.ctx;
    const long m = req.m;

    PadicNumber one_minus_s = one(ctx) - req.s;
    auto [angle_m, omega_v_m] = angle_omega_v(Rational(m), ctx);
    PadicNumber prefactor = power_angle(angle_m, one_minus_s);

    EmbeddedCharacter emb(req.chi, ctx);
    PadicNumber acc = PadicNumber::zero(ctx);
    for (long a = 0; a < m; ++a) {
        if (a % ctx.p == 0)
            continue;
        const PadicNumber& cv = emb.value(a);
        if (cv.is_exact_zero())
            continue;
        PadicNumber z = hurwitz_euler_zeta(req.s, CZpPoint(Integer(a), m, ctx.p), ctx);
        PadicNumber term = cv * z;
        if (a % 2 != 0)
            acc = acc - term;
        else
            acc = acc + term;
    }
    return prefactor * acc;
}

PadicNumber lp_eval(const DirichletCharacter& chi, const PadicNumber& s,
                    const PadicContext& ctx) {
    return lp_eval(LValueRequest(chi, s, ctx));
}

PadicNumber lp_neg_closed(const DirichletCharacter& chi, long k,
                          const PadicContext& ctx) {
    if (k < 1)
        throw domain_error("lp_neg_closed: k must be >= 1");
    DirichletCharacter prim = admissible(chi, ctx);
    if (prim.is_trivial())
        throw domain_error("lp_neg_closed: the trivial character is excluded "
                           "(L_{p,E}(chi_0, s) vanishes identically)");
    DirichletCharacter chi_k = to_primitive(char_times_omega(prim, -k, ctx));
    if (chi_k.modulus() % 2 == 0)
        throw domain_error("lp_neg_closed: twisted character has even conductor");

    long N = std::lcm(chi_k.modulus(), ctx.p);
    PadicNumber e_val = embed_padic(gen_euler_number(chi_k, k, N).value, ctx);

    long ep = chi_k.exponent_at(ctx.p);
    PadicNumber factor = one(ctx);
    if (ep >= 0) {
        PadicNumber chi_k_p =
            embed_padic(CyclotomicElement::root_of_unity(chi_k.order(), ep), ctx);
        factor = factor - PadicNumber::from_integer(ctx.p, ctx).pow(k) * chi_k_p;
    }
    return factor * e_val;
}

PadicNumber lp_at_one(const DirichletCharacter& chi, const PadicContext& ctx) {
    DirichletCharacter prim = admissible(chi, ctx);
    if (prim.is_trivial())
        throw domain_error("lp_at_one: chi must be nontrivial");
    long m = std::lcm(prim.modulus(), ctx.p);
    EmbeddedCharacter emb(prim, ctx);
    PadicNumber acc = PadicNumber::zero(ctx);
    for (long a = 0; a < m; ++a) {
        if (a % ctx.p == 0)
            continue;
        const PadicNumber& cv = emb.value(a);
        if (cv.is_exact_zero())
            continue;
        acc = a % 2 != 0 ? acc - cv : acc + cv;
    }
    return acc;
}

LpLimitResult lp_pos_limit(const DirichletCharacter& chi, long k, int level_cap,
                           const PadicContext& ctx) {
    if (k == 0)
        throw domain_error("lp_pos_limit: k must be nonzero");
    DirichletCharacter prim = admissible(chi, ctx);
    long m = std::lcm(prim.modulus(), ctx.p);
    DirichletCharacter twisted = product(prim, teichmuller_character(ctx.p, k));
    EmbeddedCharacter emb(twisted, ctx);

    Integer mod = ctx.working_modulus();
    detail::LimitOptions opt;
    opt.span = m;
    opt.units_only = true;
    opt.level_cap = level_cap > 0 ? level_cap : ctx.target_precision + 6;

    IntegrationResult r = detail::alternating_limit_integer(
        ctx, opt, [&](std::uint64_t n, Integer& out) {
            const Integer& cv = emb.unit_residue(
                static_cast<long>(n % static_cast<std::uint64_t>(twisted.modulus())));
            if (cv == 0) {
                out = 0;
                return;
            }
            Integer base(static_cast<unsigned long>(n));
            if (k > 0) {
                mpz_invert(out.get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t());
                mpz_powm_ui(out.get_mpz_t(), out.get_mpz_t(),
                            static_cast<unsigned long>(k), mod.get_mpz_t());
            } else {
                mpz_powm_ui(out.get_mpz_t(), base.get_mpz_t(),
                            static_cast<unsigned long>(-k), mod.get_mpz_t());
            }
            out = out * cv % mod;
        });
    return {r.value, std::move(r.trace)};
}

PadicNumber chi_euler_number(long k, const DirichletCharacter& chi,
                             const PadicContext& ctx) {
    DirichletCharacter prim = admissible(chi, ctx);
    if (k >= 1) {
        // Closed route: E_{k,p,chi} = (1 - p^k chi(p)) E_{k,chi}.
        long N = std::lcm(prim.modulus(), ctx.p);
        PadicNumber e_val = embed_padic(gen_euler_number(prim, k, N).value, ctx);
        long ep = prim.exponent_at(ctx.p);
        PadicNumber factor = one(ctx);
        if (ep >= 0) {
            PadicNumber chi_p =
                embed_padic(CyclotomicElement::root_of_unity(prim.order(), ep), ctx);
            factor = factor - PadicNumber::from_integer(ctx.p, ctx).pow(k) * chi_p;
        }
        return factor * e_val;
    }
    // L-series route at s = 1 - k >= 1 for the character chi omega^k.
    DirichletCharacter twisted =
        to_primitive(char_times_omega(prim, k, ctx));
    PadicNumber s = PadicNumber::from_integer(1 - k, ctx);
    return lp_eval(twisted, s, ctx);
}

std::vector<PadicNumber> chi_euler_limit_trace(long k, const DirichletCharacter& chi,
                                               int r_max, const PadicContext& ctx) {
    DirichletCharacter prim = admissible(chi, ctx);
    long N = std::lcm(prim.modulus(), ctx.p);
    std::vector<PadicNumber> out;
    long phi_pr = ctx.p - 1; // Phi(p^r)
    for (int r = 1; r <= r_max; ++r) {
        long idx = phi_pr + k;
        if (idx >= 0)
            out.push_back(embed_padic(gen_euler_number(prim, idx, N).value, ctx));
        phi_pr *= ctx.p;
    }
    return out;
}

PadicNumber h_sum(long n, const DirichletCharacter& chi, const PadicContext& ctx) {
    if (n < 1)
        throw domain_error("h_sum: n must be >= 1");
    DirichletCharacter prim = admissible(chi, ctx);
    long m = std::lcm(prim.modulus(), ctx.p);
    EmbeddedCharacter emb(prim, ctx);
    Integer mod = ctx.working_modulus();
    Integer acc(0), t;
    for (long a = 0; a < m; ++a) {
        if (a % ctx.p == 0)
            continue;
        const Integer& cv = emb.unit_residue(a);
        if (cv == 0)
            continue;
        Integer base(a);
        mpz_invert(t.get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t());
        mpz_powm_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(n),
                    mod.get_mpz_t());
        t = t * cv % mod;
        if (a % 2 != 0)
            acc -= t;
        else
            acc += t;
    }
    acc %= mod;
    if (acc < 0)
        acc += mod;
    return PadicNumber::from_parts(ctx, 0, acc, ctx.working_precision());
}

PadicNumber chi_euler_h_series(long k, const DirichletCharacter& chi,
                               const PadicContext& ctx) {
    if (k < 1)
        throw domain_error("chi_euler_h_series: k must be >= 1");
    DirichletCharacter prim = admissible(chi, ctx);
    long m = std::lcm(prim.modulus(), ctx.p);
    const long w = ctx.working_precision();
    long i_max = series_truncation_bound(ctx.p, static_cast<int>(w));

    PadicNumber acc = PadicNumber::zero(ctx);
    PadicNumber tail1 = PadicNumber::zero(ctx), tail2 = PadicNumber::zero(ctx);
    Rational m_pow(1);
    for (long i = 0; i <= i_max; ++i) {
        Rational e = euler_number(static_cast<int>(i));
        if (e != 0) {
            Integer b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k + i - 1),
                         static_cast<unsigned long>(k - 1));
            Rational c = Rational(b) * m_pow * e;
            if (i % 2 != 0)
                c = -c;
            PadicNumber term =
                PadicNumber::from_rational(c, ctx) * h_sum(k + i, prim, ctx);
            acc = acc + term;
            tail1 = tail2;
            tail2 = term;
        }
        m_pow *= m;
    }
    if (!provably_below(tail1, w) || !provably_below(tail2, w))
        throw convergence_error("chi_euler_h_series: tail not provably below the "
                                "working threshold");
    return acc;
}

PadicNumber zeta_p_euler(const PadicNumber& s, const PadicContext& ctx) {
    return lp_eval(DirichletCharacter::trivial(), s, ctx);
}

} // namespace pel
