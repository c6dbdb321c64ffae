#include "pel/characters.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pel {

namespace {

long mod_reduce(long n, long m) {
    long r = n % m;
    return r < 0 ? r + m : r;
}

long mod_reduce(const Integer& n, long m) {
    return static_cast<long>(mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(m)));
}

long pow_mod(long base, long exp, long m) {
    unsigned long long acc = 1 % m;
    unsigned long long b = mod_reduce(base, m);
    while (exp > 0) {
        if (exp & 1)
            acc = acc * b % m;
        b = b * b % m;
        exp >>= 1;
    }
    return static_cast<long>(acc);
}

// One cyclic factor of (Z/f)^x: residues are projected to `modulus` and
// looked up in the dlog table of `generator`.
struct CyclicFactor {
    long modulus;
    long generator;
    long order;
    std::vector<long> dlog; // indexed by residue mod modulus; -1 for non-units
};

std::vector<long> dlog_table(long modulus, long generator, long order) {
    std::vector<long> table(modulus, -1);
    long x = 1 % modulus;
    for (long e = 0; e < order; ++e) {
        table[x] = e;
        x = static_cast<long>(static_cast<unsigned long long>(x) * generator % modulus);
    }
    return table;
}

std::vector<std::pair<long, long>> factorize(long f) {
    std::vector<std::pair<long, long>> out;
    for (long q = 2; q * q <= f; ++q) {
        if (f % q == 0) {
            long e = 0;
            while (f % q == 0) {
                f /= q;
                ++e;
            }
            out.emplace_back(q, e);
        }
    }
    if (f > 1)
        out.emplace_back(f, 1);
    return out;
}

long smallest_generator(long prime_power, long phi) {
    for (long g = 2; g < prime_power; ++g) {
        if (std::gcd(g, prime_power) != 1)
            continue;
        if (multiplicative_order(g, prime_power) == phi)
            return g;
    }
    throw domain_error("smallest_generator: group is not cyclic");
}

std::vector<CyclicFactor> unit_group_factors(long f) {
    std::vector<CyclicFactor> factors;
    for (auto [q, e] : factorize(f)) {
        long qe = 1;
        for (long i = 0; i < e; ++i)
            qe *= q;
        if (q == 2) {
            if (e == 1)
                continue; // (Z/2)^x is trivial
            if (e == 2) {
                factors.push_back({4, 3, 2, dlog_table(4, 3, 2)});
                continue;
            }
            // (Z/2^e)^x = <-1> x <5>: fill both tables by joint enumeration
            // of (-1)^s 5^j, since neither generator alone reaches every unit.
            std::vector<long> sign_table(qe, -1), five_table(qe, -1);
            long half = qe / 4;
            long pw = 1;
            for (long j = 0; j < half; ++j) {
                sign_table[pw] = 0;
                five_table[pw] = j;
                sign_table[qe - pw] = 1;
                five_table[qe - pw] = j;
                pw = static_cast<long>(static_cast<unsigned long long>(pw) * 5 % qe);
            }
            factors.push_back({qe, qe - 1, 2, std::move(sign_table)});
            factors.push_back({qe, 5, half, std::move(five_table)});
            continue;
        }
        long phi = qe - qe / q;
        long g = smallest_generator(qe, phi);
        factors.push_back({qe, g, phi, dlog_table(qe, g, phi)});
    }
    return factors;
}

// For 2^e with e >= 3 the <-1, 5> decomposition needs a joint lookup:
// handled by searching the two dlog tables together below.
long factor_dlog(const CyclicFactor& fac, long a) {
    return fac.dlog[mod_reduce(a, fac.modulus)];
}

} // namespace

DirichletCharacter::DirichletCharacter(long modulus, long order, long conductor,
                                       int parity, std::vector<long> exps)
    : modulus_(modulus), order_(order), conductor_(conductor), parity_(parity),
      exps_(std::move(exps)) {}

long DirichletCharacter::exponent_at(long n) const {
    return exps_[mod_reduce(n, modulus_)];
}

long DirichletCharacter::exponent_at(const Integer& n) const {
    return exps_[mod_reduce(n, modulus_)];
}

CyclotomicElement DirichletCharacter::operator()(long n) const {
    long e = exponent_at(n);
    if (e < 0)
        return CyclotomicElement(order_);
    return CyclotomicElement::root_of_unity(order_, e);
}

CyclotomicElement DirichletCharacter::operator()(const Integer& n) const {
    long e = exponent_at(n);
    if (e < 0)
        return CyclotomicElement(order_);
    return CyclotomicElement::root_of_unity(order_, e);
}

std::string DirichletCharacter::key() const {
    std::ostringstream os;
    os << modulus_ << ":" << order_ << ":";
    for (long e : exps_)
        os << e << ",";
    return os.str();
}

bool DirichletCharacter::operator==(const DirichletCharacter& rhs) const {
    return modulus_ == rhs.modulus_ && order_ == rhs.order_ && exps_ == rhs.exps_;
}

DirichletCharacter DirichletCharacter::trivial() {
    return DirichletCharacter(1, 1, 1, 1, std::vector<long>{0});
}

DirichletCharacter DirichletCharacter::from_exponents(long modulus, long order,
                                                      std::vector<long> exps) {
    if (modulus < 1)
        throw domain_error("DirichletCharacter: modulus must be >= 1");
    if (exps.size() != static_cast<size_t>(modulus))
        throw domain_error("DirichletCharacter: table size must equal the modulus");
    if (modulus == 1)
        return trivial();

    // reduce to the true order
    long g = order;
    for (long a = 0; a < modulus; ++a) {
        if (exps[a] > 0)
            g = std::gcd(g, exps[a]);
    }
    long true_order = order / g;
    if (g > 1) {
        for (auto& e : exps)
            if (e > 0)
                e /= g;
    }

    // conductor: smallest divisor f' of f with chi trivial on the kernel of
    // (Z/f)^x -> (Z/f')^x
    long conductor = modulus;
    for (long fp = 1; fp <= modulus; ++fp) {
        if (modulus % fp != 0)
            continue;
        bool ok = true;
        for (long a = 1; a < modulus && ok; ++a) {
            if (exps[a] < 0 || a % fp != 1 % fp)
                continue;
            if (exps[a] != 0)
                ok = false;
        }
        if (ok) {
            conductor = fp;
            break;
        }
    }

    int parity;
    if (modulus == 1) {
        parity = 1;
    } else {
        long em1 = exps[modulus - 1];
        if (em1 < 0)
            throw domain_error("DirichletCharacter: chi(-1) must be a unit value");
        if (em1 == 0)
            parity = 1;
        else if (2 * em1 == true_order)
            parity = 0;
        else
            throw domain_error("DirichletCharacter: chi(-1) is not +-1");
    }

    return DirichletCharacter(modulus, true_order, conductor, parity, std::move(exps));
}

std::vector<DirichletCharacter> characters_mod(long f) {
    if (f < 1)
        throw domain_error("characters_mod: f must be >= 1");
    if (f == 1)
        return {DirichletCharacter::trivial()};

    std::vector<CyclicFactor> factors = unit_group_factors(f);
    long count = 1;
    for (const auto& fac : factors)
        count *= fac.order;

    // Exponent order L: all character values are L-th roots of unity.
    long L = 1;
    for (const auto& fac : factors)
        L = std::lcm(L, fac.order);

    std::vector<DirichletCharacter> out;
    out.reserve(count);
    std::vector<long> tuple(factors.size(), 0);
    for (long idx = 0; idx < count; ++idx) {
        std::vector<long> exps(f, -1);
        for (long a = 0; a < f; ++a) {
            if (std::gcd(a, f) != 1)
                continue;
            long e = 0;
            for (size_t i = 0; i < factors.size(); ++i) {
                long d = factor_dlog(factors[i], a);
                e = (e + tuple[i] * d % L * (L / factors[i].order)) % L;
            }
            exps[a] = e;
        }
        out.push_back(DirichletCharacter::from_exponents(f, L, std::move(exps)));
        // lexicographic increment, last factor fastest
        for (long i = static_cast<long>(tuple.size()) - 1; i >= 0; --i) {
            if (++tuple[i] < factors[i].order)
                break;
            tuple[i] = 0;
        }
    }
    return out;
}

DirichletCharacter quadratic_character(long f) {
    if (f < 1 || f % 2 == 0)
        throw domain_error("quadratic_character: f must be odd and >= 1");
    if (f == 1)
        return DirichletCharacter::trivial();
    std::vector<long> exps(f, -1);
    Integer fz(f);
    for (long a = 0; a < f; ++a) {
        if (std::gcd(a, f) != 1)
            continue;
        Integer az(a);
        int j = mpz_jacobi(az.get_mpz_t(), fz.get_mpz_t());
        exps[a] = j == 1 ? 0 : 1;
    }
    return DirichletCharacter::from_exponents(f, 2, std::move(exps));
}

DirichletCharacter teichmuller_character(long p, long k) {
    if (!is_prime(p) || p < 3)
        throw domain_error("teichmuller_character: p must be an odd prime");
    long g = smallest_primitive_root(p);
    std::vector<long> dlog = dlog_table(p, g, p - 1);
    long d = p - 1;
    long kk = mod_reduce(k, d);
    std::vector<long> exps(p, -1);
    for (long a = 1; a < p; ++a)
        exps[a] = kk * dlog[a] % d;
    return DirichletCharacter::from_exponents(p, d, std::move(exps));
}

DirichletCharacter product(const DirichletCharacter& a, const DirichletCharacter& b) {
    long f = std::lcm(a.modulus(), b.modulus());
    long D = std::lcm(a.order(), b.order());
    std::vector<long> exps(f, -1);
    for (long n = 0; n < f; ++n) {
        if (std::gcd(n, f) != 1)
            continue;
        long ea = a.exponent_at(n);
        long eb = b.exponent_at(n);
        if (ea < 0 || eb < 0)
            throw domain_error("product: induced character vanishes on a unit");
        exps[n] = (ea * (D / a.order()) + eb * (D / b.order())) % D;
    }
    return DirichletCharacter::from_exponents(f, D, std::move(exps));
}

DirichletCharacter to_primitive(const DirichletCharacter& chi) {
    long c = chi.conductor();
    if (c == chi.modulus())
        return chi;
    if (c == 1)
        return DirichletCharacter::trivial();
    long f = chi.modulus();
    std::vector<long> exps(c, -1);
    for (long a = 0; a < c; ++a) {
        if (std::gcd(a, c) != 1)
            continue;
        long b = a;
        while (std::gcd(b, f) != 1)
            b += c;
        exps[a] = chi.exponent_at(b);
    }
    return DirichletCharacter::from_exponents(c, chi.order(), std::move(exps));
}

DirichletCharacter char_times_omega(const DirichletCharacter& chi, long k,
                                    const PadicContext& ctx) {
    if ((ctx.p - 1) % chi.order() != 0)
        throw domain_error("char_times_omega: character order does not divide p-1; "
                           "values are not representable in Z_p");
    return product(chi, teichmuller_character(ctx.p, k));
}

int chi_0m(long a, long m, long p) {
    if (m < 1)
        throw domain_error("chi_0m: m must be >= 1");
    bool p_div_a = mod_reduce(a, p) == 0;
    if (!p_div_a)
        return 1;
    return m % p == 0 ? 0 : 1;
}

PadicNumber embed_padic(const CyclotomicElement& v, const PadicContext& ctx) {
    long d = v.order();
    if ((ctx.p - 1) % d != 0)
        throw domain_error("embed_padic: order " + std::to_string(d) +
                           " does not divide p-1 = " + std::to_string(ctx.p - 1));
    long g = smallest_primitive_root(ctx.p);
    long root = pow_mod(g, (ctx.p - 1) / d, ctx.p);
    PadicNumber zeta_img = teichmuller(root, ctx);
    PadicNumber acc = PadicNumber::zero(ctx);
    PadicNumber zpow = PadicNumber::from_integer(1, ctx);
    const auto& coeffs = v.coeffs();
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0)
            acc = acc + PadicNumber::from_rational(coeffs[i], ctx) * zpow;
        if (i + 1 < coeffs.size())
            zpow = zpow * zeta_img;
    }
    return acc;
}

EmbeddedCharacter::EmbeddedCharacter(const DirichletCharacter& chi,
                                     const PadicContext& ctx)
    : chi_(chi), ctx_(ctx) {
    long f = chi.modulus();
    values_.reserve(f);
    residues_.reserve(f);
    // one embedding of zeta_d, then exponent lookups
    std::vector<PadicNumber> powers;
    powers.reserve(chi.order());
    PadicNumber zeta_img = embed_padic(
        CyclotomicElement::root_of_unity(chi.order(), 1), ctx);
    PadicNumber cur = PadicNumber::from_integer(1, ctx);
    for (long e = 0; e < chi.order(); ++e) {
        powers.push_back(cur);
        if (e + 1 < chi.order())
            cur = cur * zeta_img;
    }
    for (long a = 0; a < f; ++a) {
        long e = chi.exponent_table()[a];
        if (e < 0) {
            values_.push_back(PadicNumber::zero(ctx));
            residues_.emplace_back(0);
        } else {
            values_.push_back(powers[e]);
            residues_.push_back(powers[e].residue_mod(ctx.working_precision()));
        }
    }
}

const PadicNumber& EmbeddedCharacter::value(long n) const {
    return values_[mod_reduce(n, chi_.modulus())];
}

const Integer& EmbeddedCharacter::unit_residue(long n) const {
    return residues_[mod_reduce(n, chi_.modulus())];
}

} // namespace pel
