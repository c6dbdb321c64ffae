#pragma once

#include "pel/characters.hpp"
#include "pel/euler.hpp"

namespace pel {

// E_{n,chi}: coefficient of t^n/n! in 2 sum_{a=1}^{f} (-1)^a chi(a) e^{at} / (e^{ft}+1),
// exact in Q(zeta_d). The value is computed from the finite form
// E_{n,chi} = N^n sum_{a=1}^{N} (-1)^a chi(a) E_n(a/N), which gives the same
// value for every odd multiple N of the modulus; N = lcm(p, f) is the default.
struct GeneralizedEulerValue {
    DirichletCharacter character;
    long index;
    CyclotomicElement value;
};

// Requires odd modulus and odd N divisible by the modulus. Memoized on
// (chi, n, N); cyclotomic arithmetic is exact so the cache is a pure memo.
GeneralizedEulerValue gen_euler_number(const DirichletCharacter& chi, long n, long N);

// N = lcm(p, f) default.
GeneralizedEulerValue gen_euler_number(const DirichletCharacter& chi, long n,
                                       const PadicContext& ctx);

// E_{n,chi}(x) = sum_i binom(n,i) E_{i,chi} x^{n-i}, exact.
CyclotomicElement gen_euler_poly(const DirichletCharacter& chi, long n,
                                 const Rational& x, long N);

// The finite alternating power sum sum_{r=0}^{N-1} (-1)^r chi(r) (x+r)^n,
// computed directly; equals (E_{n,chi}(x) + E_{n,chi}(x+N)) / 2 for odd N.
CyclotomicElement alt_power_sum(const DirichletCharacter& chi, long n,
                                const Rational& x, long N);

long default_span(const DirichletCharacter& chi, long p); // lcm(p, modulus)

} // namespace pel
