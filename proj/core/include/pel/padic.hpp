#pragma once

#include <utility>
#include <vector>

#include "pel/rational.hpp"

namespace pel {

// Capped-precision arithmetic over Q_p for an odd prime p.
//
// A number is stored as p^v * u where u is a unit residue carried modulo
// p^known_digits. Answers the user sees are asserted modulo p^M
// (target_precision); all internal work happens modulo p^(M+G) with G guard
// digits. Every value is immutable after construction and every operation is
// a pure function, so values may be shared freely across threads.
struct PadicContext {
    long p = 3;              // odd prime >= 3
    int target_precision = 6; // M >= 1
    int guard_digits = 2;     // G >= 0

    PadicContext(long p_, int target, int guard);

    int working_precision() const { return target_precision + guard_digits; }
    Integer pow_p(long k) const; // p^k, k >= 0
    Integer working_modulus() const { return pow_p(working_precision()); }

    bool operator==(const PadicContext&) const = default;
};

// Guard digits covering the worst-case division by i! in the series engines
// for this (p, M): v_p(i0!) + 2 with i0 the baseline truncation bound.
int default_guard_digits(long p, int target_precision);

// Context with the default guard policy applied.
PadicContext make_context(long p, int target_precision);

class PadicNumber {
public:
    // Exact zero (valuation +infinity).
    static PadicNumber zero(const PadicContext& ctx);

    // A value only known to vanish modulo p^abs_bound ("O(p^abs_bound)"):
    // what survives when a subtraction cancels every known digit.
    static PadicNumber zero_to_precision(const PadicContext& ctx, long abs_bound);

    static PadicNumber from_integer(const Integer& n, const PadicContext& ctx);
    static PadicNumber from_integer(long n, const PadicContext& ctx);

    // Canonical embedding of Q into Q_p at full working precision. The
    // denominator may contain p; it shifts the valuation.
    static PadicNumber from_rational(const Rational& q, const PadicContext& ctx);

    // p^valuation * unit with `digits` trustworthy unit digits. unit is
    // reduced modulo p^digits and must be a unit when digits > 0.
    static PadicNumber from_parts(const PadicContext& ctx, long valuation,
                                  Integer unit, int digits);

    const PadicContext& context() const { return ctx_; }
    bool is_exact_zero() const { return exact_zero_; }

    // True when nothing is known beyond "divisible by p^valuation()":
    // the O(p^E) marker produced by full cancellation.
    bool is_precision_zero() const { return !exact_zero_ && known_digits_ == 0; }

    // For exact zero this would be +infinity; callers must branch first.
    long valuation() const;
    int known_digits() const { return known_digits_; }
    const Integer& unit() const { return unit_; }

    // Exponent e such that the value is known modulo p^e (v + known digits).
    long absolute_precision() const;

    PadicNumber operator-() const;
    PadicNumber operator+(const PadicNumber& rhs) const;
    PadicNumber operator-(const PadicNumber& rhs) const;
    PadicNumber operator*(const PadicNumber& rhs) const;
    PadicNumber operator/(const PadicNumber& rhs) const;

    PadicNumber inverse() const;
    PadicNumber pow(long e) const; // e < 0 requires a unit base

    // Does the value vanish modulo p^k? Throws precision_error when the
    // carried precision cannot decide.
    bool is_zero_mod(int k) const;

    // Lift to the canonical residue in [0, p^k); requires valuation >= 0
    // and enough known digits. Exact zero lifts to 0.
    Integer residue_mod(int k) const;

    bool congruent_mod(const PadicNumber& rhs, int k) const;

    // Unit digits, least significant first, base p (known_digits entries).
    std::vector<long> digit_vector() const;

    // "p^v * u + O(p^e)" rendering for diagnostics.
    std::string to_string() const;

private:
    PadicNumber(const PadicContext& ctx, bool exact_zero, long valuation,
                Integer unit, int digits);

    void check_same_context(const PadicNumber& rhs) const;

    PadicContext ctx_;
    bool exact_zero_;
    long valuation_;    // abs_bound when known_digits_ == 0
    Integer unit_;
    int known_digits_;
};

// The Teichmueller lift omega(a): the unique (p-1)-th root of unity in Z_p
// congruent to a mod p, computed as the fixed point of x -> x^p. Requires
// gcd(a, p) = 1.
PadicNumber teichmuller(const Integer& a, const PadicContext& ctx);
PadicNumber teichmuller(long a, const PadicContext& ctx);

// Splits nonzero x as omega_v(x) * <x> where <x> = <x / p^{v_p(x)}> is a
// 1-unit and omega_v(x) = p^{v_p(x)} * omega(x / p^{v_p(x)}).
// Returns {angle, omega_v}.
std::pair<PadicNumber, PadicNumber> angle_omega_v(const Rational& x,
                                                  const PadicContext& ctx);

// binom(s, i) = s(s-1)...(s-i+1) / i! as a p-adic value. The division by i!
// costs exactly v_p(i!) digits of absolute precision; throws precision_error
// if no certified digit would remain.
PadicNumber binom_coeff(const PadicNumber& s, long i);

// base^s for base = 1 (mod p) and s in Z_p, via the binomial series
// sum_n binom(s, n) (base - 1)^n. power_angle(a, 0) = 1, power_angle(a, 1) = a.
PadicNumber power_angle(const PadicNumber& base_angle, const PadicNumber& s);

// Truncation bound for the precision-certified series engines: terms of
// valuation > i are dropped after i_max = ceil(W(p-1)/(p-2)) + 4 terms.
long series_truncation_bound(long p, int working_precision);

} // namespace pel
