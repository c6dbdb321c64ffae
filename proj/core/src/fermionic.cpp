#include "pel/fermionic.hpp"

#include "alternating_limit.hpp"

namespace pel {

IntegrandSpec IntegrandSpec::polynomial(RationalPolynomial P) {
    IntegrandSpec s;
    s.kind_ = Kind::polynomial;
    s.poly_ = std::move(P);
    return s;
}

IntegrandSpec IntegrandSpec::twisted_power(DirichletCharacter chi, long k, Rational shift) {
    IntegrandSpec s;
    s.kind_ = Kind::twisted_power;
    s.chi_ = std::move(chi);
    s.power_ = k;
    s.shift_ = std::move(shift);
    return s;
}

IntegrandSpec IntegrandSpec::generic(Callback f, int continuity_constant) {
    if (!f)
        throw domain_error("IntegrandSpec::generic: empty callback");
    if (continuity_constant < 0)
        throw domain_error("IntegrandSpec::generic: continuity constant must be >= 0");
    IntegrandSpec s;
    s.kind_ = Kind::generic;
    s.callback_ = std::move(f);
    s.continuity_ = continuity_constant;
    return s;
}

namespace {

// I_{-1}(P) = sum_j c_j E_j, exactly.
PadicNumber poly_integral_exact(const RationalPolynomial& P, const PadicContext& ctx) {
    Rational acc(0);
    const auto& c = P.coefficients();
    for (size_t j = 0; j < c.size(); ++j)
        acc += c[j] * euler_number(static_cast<int>(j));
    return PadicNumber::from_rational(acc, ctx);
}

// P(c * x)
RationalPolynomial compose_scale(const RationalPolynomial& P, const Rational& c) {
    std::vector<Rational> v = P.coefficients();
    Rational pw(1);
    for (size_t j = 0; j < v.size(); ++j) {
        v[j] *= pw;
        pw *= c;
    }
    return RationalPolynomial(std::move(v));
}

// I_{-1}(chi(y)(x+y)^k) = E_{k,chi}(x), embedded. For modulus 1 the twist is
// identically one and the integrand is plain (x+y)^k with value E_k(x);
// the E_{n,chi} form has a different a = 0 boundary there.
PadicNumber twisted_integral_zp_exact(const IntegrandSpec& f, const PadicContext& ctx) {
    if (f.character().modulus() == 1) {
        Rational v = euler_polynomial(static_cast<int>(f.power()))(f.shift());
        return PadicNumber::from_rational(v, ctx);
    }
    CyclotomicElement e = gen_euler_poly(f.character(), f.power(), f.shift(),
                                         default_span(f.character(), ctx.p));
    return embed_padic(e, ctx);
}

// Unit restriction by the subtraction identity:
// int_units f = int_Zp f - int_Zp f(p .), valid since p is odd.
PadicNumber twisted_integral_units_exact(const IntegrandSpec& f, const PadicContext& ctx) {
    const long p = ctx.p;
    long k = f.power();
    if (f.character().modulus() == 1) {
        Rational direct = euler_polynomial(static_cast<int>(k))(f.shift());
        Rational scaled = rational_pow(Rational(p), k) *
                          euler_polynomial(static_cast<int>(k))(f.shift() / p);
        return PadicNumber::from_rational(direct - scaled, ctx);
    }
    long N = default_span(f.character(), p);
    PadicNumber direct = embed_padic(
        gen_euler_poly(f.character(), k, f.shift(), N), ctx);
    long ep = f.character().exponent_at(p);
    if (ep < 0)
        return direct; // chi(p) = 0: the p-multiples contribute nothing
    PadicNumber chi_p = embed_padic(
        CyclotomicElement::root_of_unity(f.character().order(), ep), ctx);
    PadicNumber scaled = embed_padic(
        gen_euler_poly(f.character(), k, f.shift() / p, N), ctx);
    return direct - chi_p * PadicNumber::from_integer(p, ctx).pow(k) * scaled;
}

// Partial-sum term provider for polynomial integrands. Coefficients with p
// in the denominator are factored out as a global p^vmin.
struct PolyLimit {
    long vmin = 0;
    std::vector<Integer> residues; // of p^{-vmin} c_j, mod p^W
    Integer scratch_base, scratch;

    PolyLimit(const RationalPolynomial& P, const PadicContext& ctx) {
        const auto& c = P.coefficients();
        for (const auto& q : c)
            if (q != 0)
                vmin = std::min(vmin, vp(q, ctx.p));
        Rational scale = rational_pow(Rational(ctx.p), -vmin);
        Integer mod = ctx.working_modulus();
        for (const auto& q : c) {
            if (q == 0) {
                residues.emplace_back(0);
                continue;
            }
            Rational qq = q * scale;
            Integer den_inv;
            if (mpz_invert(den_inv.get_mpz_t(), Integer(qq.get_den()).get_mpz_t(),
                           mod.get_mpz_t()) == 0)
                throw domain_error("ferint: coefficient denominator not invertible");
            Integer r = Integer(qq.get_num()) % mod * den_inv % mod;
            if (r < 0)
                r += mod;
            residues.push_back(std::move(r));
        }
    }

    void operator()(std::uint64_t a, Integer& out, const Integer& mod) {
        // Horner at a
        out = 0;
        for (auto it = residues.rbegin(); it != residues.rend(); ++it) {
            out *= static_cast<unsigned long>(a);
            out += *it;
            out %= mod;
        }
    }
};

IntegrationResult poly_limit(const RationalPolynomial& P, const PadicContext& ctx,
                             bool units_only, int level_cap) {
    PolyLimit prov(P, ctx);
    detail::LimitOptions opt;
    opt.units_only = units_only;
    opt.level_cap = level_cap;
    Integer mod = ctx.working_modulus();
    IntegrationResult res = detail::alternating_limit_integer(
        ctx, opt, [&](std::uint64_t a, Integer& out) { prov(a, out, mod); });
    if (prov.vmin != 0) {
        PadicNumber shift = PadicNumber::from_parts(ctx, prov.vmin, Integer(1),
                                                    ctx.working_precision());
        res.value = res.value * shift;
        for (auto& step : res.trace)
            step.partial = step.partial * shift;
    }
    return res;
}

IntegrationResult twisted_limit(const IntegrandSpec& f, const PadicContext& ctx,
                                bool units_only, int level_cap) {
    const long k = f.power();
    const Rational& x = f.shift();
    if (f.character().modulus() % 2 == 0)
        throw domain_error("integrate: twisted integrands require an odd modulus");
    detail::LimitOptions opt;
    opt.units_only = units_only;
    opt.level_cap = level_cap;
    // chi is locally constant mod f, not p-adically continuous: partial sums
    // must run over whole character periods, so the ranges are f * p^N
    // (cofinal with the lcm(f,p) p^r ranges that define the twisted integral).
    opt.span = f.character().modulus();

    EmbeddedCharacter emb(f.character(), ctx);
    Integer mod = ctx.working_modulus();

    if (mpz_divisible_ui_p(Integer(x.get_den()).get_mpz_t(),
                           static_cast<unsigned long>(ctx.p))) {
        // p in the shift denominator: fall back to exact PadicNumber terms
        PadicNumber xs = PadicNumber::from_rational(x, ctx);
        return detail::alternating_limit_padic(
            ctx, opt, [&](std::uint64_t a, int) {
                const PadicNumber& cv = emb.value(static_cast<long>(a % emb.character().modulus()));
                if (cv.is_exact_zero())
                    return cv;
                return cv * (xs + PadicNumber::from_integer(static_cast<long>(a), ctx)).pow(k);
            });
    }

    Integer num = x.get_num();
    Integer den = x.get_den();
    Integer den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    long f_mod = f.character().modulus();

    return detail::alternating_limit_integer(ctx, opt, [&](std::uint64_t a, Integer& out) {
        const Integer& cv = emb.unit_residue(static_cast<long>(a % static_cast<std::uint64_t>(f_mod)));
        if (cv == 0) {
            out = 0;
            return;
        }
        Integer base = (num + den * static_cast<unsigned long>(a)) % mod * den_inv % mod;
        if (base < 0)
            base += mod;
        if (k >= 0) {
            mpz_powm_ui(out.get_mpz_t(), base.get_mpz_t(),
                        static_cast<unsigned long>(k), mod.get_mpz_t());
        } else {
            if (mpz_invert(out.get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t()) == 0)
                throw domain_error("integrate: (x+a) is not a unit; negative power "
                                   "undefined at a point of the domain");
            mpz_powm_ui(out.get_mpz_t(), out.get_mpz_t(),
                        static_cast<unsigned long>(-k), mod.get_mpz_t());
        }
        out = out * cv % mod;
    });
}

IntegrationResult generic_limit(const IntegrandSpec& f, const PadicContext& ctx,
                                bool units_only, int level_cap) {
    detail::LimitOptions opt;
    opt.units_only = units_only;
    opt.level_cap = level_cap;
    opt.continuity = f.continuity_constant();
    const auto& cb = f.callback();
    return detail::alternating_limit_padic(
        ctx, opt, [&](std::uint64_t a, int level) { return cb(a, level); });
}

} // namespace

IntegrationResult integrate_zp(const IntegrandSpec& f, const PadicContext& ctx) {
    switch (f.kind()) {
    case IntegrandSpec::Kind::polynomial:
        return {poly_integral_exact(f.poly(), ctx), "closed", {}};
    case IntegrandSpec::Kind::twisted_power:
        if (f.power() < 0) {
            // (x+y)^k with k < 0 is defined on Z_p iff x has negative
            // valuation (then x+y is a fixed power of p times a unit)
            if (f.shift() == 0 || vp(f.shift(), ctx.p) >= 0)
                throw domain_error("integrate_zp: negative powers are only "
                                   "defined on the unit group");
            return twisted_limit(f, ctx, false, 0);
        }
        return {twisted_integral_zp_exact(f, ctx), "closed", {}};
    case IntegrandSpec::Kind::generic:
        return generic_limit(f, ctx, false, 0);
    }
    throw domain_error("integrate_zp: unknown integrand kind");
}

IntegrationResult integrate_units(const IntegrandSpec& f, const PadicContext& ctx) {
    switch (f.kind()) {
    case IntegrandSpec::Kind::polynomial: {
        PadicNumber whole = poly_integral_exact(f.poly(), ctx);
        PadicNumber scaled =
            poly_integral_exact(compose_scale(f.poly(), Rational(ctx.p)), ctx);
        return {whole - scaled, "closed", {}};
    }
    case IntegrandSpec::Kind::twisted_power:
        if (f.power() < 0)
            return twisted_limit(f, ctx, true, 0);
        return {twisted_integral_units_exact(f, ctx), "closed", {}};
    case IntegrandSpec::Kind::generic:
        return generic_limit(f, ctx, true, 0);
    }
    throw domain_error("integrate_units: unknown integrand kind");
}

IntegrationResult integrate_zp_limit(const IntegrandSpec& f, const PadicContext& ctx,
                                     int level_cap) {
    switch (f.kind()) {
    case IntegrandSpec::Kind::polynomial:
        return poly_limit(f.poly(), ctx, false, level_cap);
    case IntegrandSpec::Kind::twisted_power:
        if (f.power() < 0 && (f.shift() == 0 || vp(f.shift(), ctx.p) >= 0))
            throw domain_error("integrate_zp_limit: negative powers are only "
                               "defined on the unit group");
        return twisted_limit(f, ctx, false, level_cap);
    case IntegrandSpec::Kind::generic:
        return generic_limit(f, ctx, false, level_cap);
    }
    throw domain_error("integrate_zp_limit: unknown integrand kind");
}

IntegrationResult integrate_units_limit(const IntegrandSpec& f, const PadicContext& ctx,
                                        int level_cap) {
    switch (f.kind()) {
    case IntegrandSpec::Kind::polynomial:
        return poly_limit(f.poly(), ctx, true, level_cap);
    case IntegrandSpec::Kind::twisted_power:
        return twisted_limit(f, ctx, true, level_cap);
    case IntegrandSpec::Kind::generic:
        return generic_limit(f, ctx, true, level_cap);
    }
    throw domain_error("integrate_units_limit: unknown integrand kind");
}

} // namespace pel
