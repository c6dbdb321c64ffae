#include "pel/rational.hpp"

#include <numeric>

namespace pel {

long vp(const Integer& n, long p) {
    if (n == 0)
        throw domain_error("vp: valuation of zero is undefined");
    Integer m = abs(n);
    long v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    return v;
}

long vp(const Rational& q, long p) {
    if (q == 0)
        throw domain_error("vp: valuation of zero is undefined");
    long v = vp(Integer(q.get_num()), p);
    if (q.get_den() != 1)
        v -= vp(Integer(q.get_den()), p);
    return v;
}

Rational rational_pow(const Rational& base, long e) {
    if (e == 0)
        return Rational(1);
    if (base == 0 && e < 0)
        throw domain_error("rational_pow: negative power of zero");
    Rational b = e < 0 ? Rational(1) / base : base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational num, den;
    mpz_pow_ui(num.get_num_mpz_t(), b.get_num_mpz_t(), n);
    mpz_pow_ui(num.get_den_mpz_t(), b.get_den_mpz_t(), n);
    num.canonicalize();
    return num;
}

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw domain_error("parse_rational: empty string");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw domain_error("parse_rational: malformed rational '" + text + "'");
    if (q.get_den() == 0)
        throw domain_error("parse_rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

bool is_prime(long n) {
    if (n < 2)
        return false;
    Integer m(n);
    return mpz_probab_prime_p(m.get_mpz_t(), 40) != 0;
}

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            result -= result / q;
            while (m % q == 0)
                m /= q;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

long multiplicative_order(long a, long n) {
    if (n <= 0 || std::gcd(a % n + n, n) != 1)
        throw domain_error("multiplicative_order: arguments not coprime");
    long x = ((a % n) + n) % n;
    long cur = x % n;
    long ord = 1;
    while (cur != 1 % n) {
        cur = static_cast<long>((static_cast<unsigned long long>(cur) * x) % n);
        ++ord;
        if (ord > n)
            throw domain_error("multiplicative_order: no order found");
    }
    return ord;
}

long smallest_primitive_root(long p) {
    if (!is_prime(p) || p == 2)
        throw domain_error("smallest_primitive_root: p must be an odd prime");
    for (long g = 2; g < p; ++g) {
        if (multiplicative_order(g, p) == p - 1)
            return g;
    }
    throw domain_error("smallest_primitive_root: none found (impossible)");
}

} // namespace pel
