#pragma once

#include <string>
#include <vector>

#include "pel/cyclotomic.hpp"
#include "pel/padic.hpp"

namespace pel {

// Dirichlet character modulo f with values in Q(zeta_d), d = order. Stored
// as a full table of root-of-unity exponents (entry -1 where chi vanishes);
// conductor and parity are computed at construction and the object is
// immutable afterwards.
//
// Parity flag convention: delta = 0 when chi(-1) = -1 (odd chi) and
// delta = 1 when chi(-1) = +1 (even chi). This is the REVERSE of the common
// Bernoulli-side convention; everything downstream keeps it.
class DirichletCharacter {
public:
    // chi^0: the trivial character modulo 1 (chi(n) = 1 for every n,
    // including 0, since every integer is a unit mod 1).
    static DirichletCharacter trivial();

    // Builds a character from its exponent table: chi(a) = zeta_order^exps[a]
    // for unit residues, exps[a] = -1 elsewhere. The order is reduced to the
    // true order of the character; conductor and parity are derived.
    static DirichletCharacter from_exponents(long modulus, long order,
                                             std::vector<long> exps);

    long modulus() const { return modulus_; }
    long order() const { return order_; }
    long conductor() const { return conductor_; }
    // delta flag: 0 iff chi(-1) = -1 (see the class comment).
    int parity_delta() const { return parity_; }
    bool is_even() const { return parity_ == 1; }
    bool is_odd() const { return parity_ == 0; }
    bool is_trivial() const { return order_ == 1; }
    bool is_primitive() const { return conductor_ == modulus_; }

    // chi(n) as an element of Q(zeta_order); zero when gcd(n, f) > 1.
    CyclotomicElement operator()(long n) const;
    CyclotomicElement operator()(const Integer& n) const;

    // Exponent e with chi(n) = zeta_order^e, or -1 when chi(n) = 0.
    long exponent_at(long n) const;
    long exponent_at(const Integer& n) const;
    const std::vector<long>& exponent_table() const { return exps_; }

    // Stable identity string (modulus, order, exponent table).
    std::string key() const;

    bool operator==(const DirichletCharacter& rhs) const;

private:
    DirichletCharacter(long modulus, long order, long conductor, int parity,
                       std::vector<long> exps);

    long modulus_;
    long order_;
    long conductor_;
    int parity_;
    std::vector<long> exps_;
};

// All phi(f) characters mod f. Enumeration order: factor f into prime powers
// ascending; each factor contributes cyclic generators (smallest primitive
// root for odd prime powers; -1 then 5 for 2^e, e >= 3; 3 for modulus 4).
// Characters are indexed lexicographically by their generator-exponent
// tuples, first factor most significant; index 0 is the trivial character.
std::vector<DirichletCharacter> characters_mod(long f);

// The Jacobi-symbol character a -> (a|f) for odd f >= 1. For prime f this is
// the unique quadratic character; for square f it degenerates to the trivial
// character mod f.
DirichletCharacter quadratic_character(long f);

// omega^k as an abstract character mod p of order (p-1)/gcd(p-1,k): under
// the canonical embedding its values are the Teichmueller lifts omega(a)^k.
DirichletCharacter teichmuller_character(long p, long k);

// Pointwise product, defined modulo lcm of the moduli; order, conductor and
// parity are recomputed.
DirichletCharacter product(const DirichletCharacter& a, const DirichletCharacter& b);

// The primitive character of conductor f_chi inducing chi.
DirichletCharacter to_primitive(const DirichletCharacter& chi);

// chi * omega^k as a character mod lcm(f, p); requires ord(chi) | p - 1.
DirichletCharacter char_times_omega(const DirichletCharacter& chi, long k,
                                    const PadicContext& ctx);

// Definition of chi_{0,m}: 1 when p does not divide a, or when p | a but
// p does not divide m; 0 when p | a and p | m.
int chi_0m(long a, long m, long p);

// Sum of g(a) over 0 <= a < m with p not dividing a, in whatever ring g
// returns. acc is the additive identity to start from.
template <typename T, typename G>
T restricted_sum(long m, long p, G&& g, T acc) {
    for (long a = 0; a < m; ++a)
        if (a % p != 0)
            acc = acc + g(a);
    return acc;
}

// Canonical ring embedding Q(zeta_d) -> Q_p for d | p - 1:
// zeta_d -> omega(g^{(p-1)/d}) with g the smallest primitive root mod p.
// The choice is arbitrary but fixed, so outputs are reproducible;
// the verified identities do not depend on it.
PadicNumber embed_padic(const CyclotomicElement& v, const PadicContext& ctx);

// Per-residue embedded character values, precomputed for hot loops.
class EmbeddedCharacter {
public:
    EmbeddedCharacter(const DirichletCharacter& chi, const PadicContext& ctx);

    const DirichletCharacter& character() const { return chi_; }
    const PadicContext& context() const { return ctx_; }

    // chi(n) embedded in Z_p; exact zero for non-units.
    const PadicNumber& value(long n) const;
    // Unit residue of chi(n) mod p^(M+G), or 0 when chi(n) = 0.
    const Integer& unit_residue(long n) const;

private:
    DirichletCharacter chi_;
    PadicContext ctx_;
    std::vector<PadicNumber> values_;
    std::vector<Integer> residues_;
};

} // namespace pel
