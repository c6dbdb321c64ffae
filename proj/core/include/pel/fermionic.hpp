#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pel/characters.hpp"
#include "pel/euler.hpp"
#include "pel/generalized_euler.hpp"

namespace pel {

// Integrand for the fermionic integral I_{-1}(f) = lim_N sum_{a<p^N} f(a)(-1)^a.
//
//  - polynomial(P):        f(x) = P(x)
//  - twisted_power:        f(y) = chi(y) (x + y)^k  (k < 0 only on units)
//  - generic(cb, c):       arbitrary f; cb receives the evaluation point as an
//                          integer residue a mod p^N together with N. The
//                          callback must honor the uniform-differentiability
//                          contract: inputs congruent mod p^j give outputs
//                          congruent mod p^{j-c} for the declared constant c.
class IntegrandSpec {
public:
    enum class Kind { polynomial, twisted_power, generic };
    using Callback = std::function<PadicNumber(std::uint64_t a, int level)>;

    static IntegrandSpec polynomial(RationalPolynomial P);
    static IntegrandSpec twisted_power(DirichletCharacter chi, long k, Rational shift);
    static IntegrandSpec generic(Callback f, int continuity_constant);

    Kind kind() const { return kind_; }
    const RationalPolynomial& poly() const { return poly_; }
    const DirichletCharacter& character() const { return *chi_; }
    long power() const { return power_; }
    const Rational& shift() const { return shift_; }
    const Callback& callback() const { return callback_; }
    int continuity_constant() const { return continuity_; }

private:
    IntegrandSpec() = default;
    Kind kind_ = Kind::polynomial;
    RationalPolynomial poly_;
    std::optional<DirichletCharacter> chi_;
    long power_ = 0;
    Rational shift_;
    Callback callback_;
    int continuity_ = 0;
};

struct StabilizationStep {
    int level;           // N
    PadicNumber partial; // S_N
};

struct IntegrationResult {
    PadicNumber value;
    std::string route; // "closed" or "limit"
    std::vector<StabilizationStep> trace;
};

// I_{-1}(f) over Z_p. Polynomial and twisted integrands take the exact route
// (I_{-1}(x^n) = E_n, I_{-1}(chi(y)(x+y)^k) = E_{k,chi}(x) embedded); generic
// callbacks run partial sums until S_N agrees mod p^M twice consecutively.
IntegrationResult integrate_zp(const IntegrandSpec& f, const PadicContext& ctx);

// Restriction to the unit group: alternating sums with p | a dropped.
// For integrands that extend to Z_p this equals
// integrate_zp(f) - integrate_zp(a -> f(pa)) (p odd), which the exact routes use.
IntegrationResult integrate_units(const IntegrandSpec& f, const PadicContext& ctx);

// Force the partial-sum route regardless of kind (oracle testing, `ferint`
// stabilization traces). level_cap <= 0 uses the default M + c + 4.
IntegrationResult integrate_zp_limit(const IntegrandSpec& f, const PadicContext& ctx,
                                     int level_cap = 0);
IntegrationResult integrate_units_limit(const IntegrandSpec& f, const PadicContext& ctx,
                                        int level_cap = 0);

} // namespace pel
