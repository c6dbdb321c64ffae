#include "pel/generalized_euler.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace pel {

namespace {

void check_args(const DirichletCharacter& chi, long n, long N) {
    if (n < 0)
        throw domain_error("gen_euler: n must be >= 0");
    if (chi.modulus() % 2 == 0)
        throw domain_error("gen_euler: even modulus is not supported "
                           "(the generating function requires odd f)");
    if (N % 2 == 0)
        throw domain_error("gen_euler: N must be odd");
    if (N < 1 || N % chi.modulus() != 0)
        throw domain_error("gen_euler: N must be a positive multiple of the modulus");
}

std::mutex cache_mutex;
std::map<std::tuple<std::string, long, long>, CyclotomicElement> cache;

Rational binom(long n, long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rational(b);
}

} // namespace

long default_span(const DirichletCharacter& chi, long p) {
    return std::lcm(chi.modulus(), p);
}

GeneralizedEulerValue gen_euler_number(const DirichletCharacter& chi, long n, long N) {
    check_args(chi, n, N);
    auto key = std::make_tuple(chi.key(), n, N);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return {chi, n, it->second};
    }

    const RationalPolynomial& En = euler_polynomial(static_cast<int>(n));
    Rational Nn = rational_pow(Rational(N), n);
    CyclotomicElement acc(chi.order());
    for (long a = 1; a <= N; ++a) {
        long e = chi.exponent_at(a);
        if (e < 0)
            continue;
        Rational r = Nn * En(Rational(a, N));
        if (a % 2 != 0)
            r = -r;
        acc = acc + CyclotomicElement::root_of_unity(chi.order(), e).scaled(r);
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::move(key), acc);
    return {chi, n, std::move(acc)};
}

GeneralizedEulerValue gen_euler_number(const DirichletCharacter& chi, long n,
                                       const PadicContext& ctx) {
    return gen_euler_number(chi, n, default_span(chi, ctx.p));
}

CyclotomicElement gen_euler_poly(const DirichletCharacter& chi, long n,
                                 const Rational& x, long N) {
    check_args(chi, n, N);
    CyclotomicElement acc(chi.order());
    for (long i = 0; i <= n; ++i) {
        CyclotomicElement ei = gen_euler_number(chi, i, N).value;
        acc = acc + ei.scaled(binom(n, i) * rational_pow(x, n - i));
    }
    return acc;
}

CyclotomicElement alt_power_sum(const DirichletCharacter& chi, long n,
                                const Rational& x, long N) {
    check_args(chi, n, N);
    CyclotomicElement acc(chi.order());
    for (long r = 0; r < N; ++r) {
        long e = chi.exponent_at(r);
        if (e < 0)
            continue;
        Rational base = x + r;
        Rational term;
        if (base == 0)
            term = n == 0 ? Rational(1) : Rational(0);
        else
            term = rational_pow(base, n);
        if (r % 2 != 0)
            term = -term;
        if (term != 0)
            acc = acc + CyclotomicElement::root_of_unity(chi.order(), e).scaled(term);
    }
    return acc;
}

} // namespace pel
