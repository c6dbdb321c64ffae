#pragma once

#include <gmpxx.h>

#include <string>

#include "pel/errors.hpp"

namespace pel {

using Integer = mpz_class;
using Rational = mpq_class;

// p-adic valuation of a nonzero integer.
long vp(const Integer& n, long p);

// p-adic valuation of a nonzero rational (negative when p divides the
// denominator).
long vp(const Rational& q, long p);

// base^e for any integer e; base must be nonzero when e < 0.
Rational rational_pow(const Rational& base, long e);

// Parses "a" or "a/b" (b > 0 after sign normalization). Throws domain_error
// on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical form: "n" when the denominator is 1, else "n/d".
std::string to_string(const Rational& q);

bool is_prime(long n);

long euler_phi(long n);

// Smallest positive primitive root modulo an odd prime p.
long smallest_primitive_root(long p);

// Multiplicative order of a modulo n, gcd(a, n) = 1.
long multiplicative_order(long a, long n);

} // namespace pel
