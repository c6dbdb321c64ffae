#include "pel/padic.hpp"

#include <sstream>

namespace pel {

namespace {

// p^k is requested constantly in arithmetic hot paths; memoize per thread.
const Integer& pow_cached(long p, long k) {
    thread_local long cached_p = 0;
    thread_local std::vector<Integer> powers;
    if (cached_p != p) {
        cached_p = p;
        powers.clear();
        powers.emplace_back(1);
    }
    while (static_cast<long>(powers.size()) <= k)
        powers.push_back(powers.back() * p);
    return powers[k];
}

Integer pow_ui(long p, long k) {
    return pow_cached(p, k);
}

Integer invert_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw domain_error("invert_mod: element is not invertible");
    return r;
}

// Legendre's formula: v_p(n!).
long vp_factorial(long n, long p) {
    long v = 0;
    for (long q = p; q <= n; q *= p) {
        v += n / q;
        if (q > n / p)
            break;
    }
    return v;
}

} // namespace

PadicContext::PadicContext(long p_, int target, int guard)
    : p(p_), target_precision(target), guard_digits(guard) {
    if (p == 2)
        throw domain_error("PadicContext: p = 2 is rejected (odd primes only)");
    if (p < 3 || !is_prime(p))
        throw domain_error("PadicContext: p must be an odd prime >= 3");
    if (target < 1)
        throw domain_error("PadicContext: target precision must be >= 1");
    if (guard < 0)
        throw domain_error("PadicContext: guard digits must be >= 0");
}

Integer PadicContext::pow_p(long k) const {
    return pow_ui(p, k);
}

long series_truncation_bound(long p, int working_precision) {
    if (p < 3)
        throw domain_error("series_truncation_bound: p must be an odd prime >= 3");
    long w = working_precision;
    return (w * (p - 1) + (p - 3)) / (p - 2) + 4;
}

int default_guard_digits(long p, int target_precision) {
    long i0 = series_truncation_bound(p, target_precision + 2);
    return static_cast<int>(vp_factorial(i0, p)) + 2;
}

PadicContext make_context(long p, int target_precision) {
    return PadicContext(p, target_precision, default_guard_digits(p, target_precision));
}

PadicNumber::PadicNumber(const PadicContext& ctx, bool exact_zero, long valuation,
                         Integer unit, int digits)
    : ctx_(ctx), exact_zero_(exact_zero), valuation_(valuation),
      unit_(std::move(unit)), known_digits_(digits) {}

PadicNumber PadicNumber::zero(const PadicContext& ctx) {
    return PadicNumber(ctx, true, 0, Integer(0), 0);
}

PadicNumber PadicNumber::zero_to_precision(const PadicContext& ctx, long abs_bound) {
    return PadicNumber(ctx, false, abs_bound, Integer(0), 0);
}

PadicNumber PadicNumber::from_parts(const PadicContext& ctx, long valuation,
                                    Integer unit, int digits) {
    if (digits <= 0)
        return zero_to_precision(ctx, valuation + digits);

    // mod is a cache reference; unused after the next pow_cached call
    const Integer& mod = pow_cached(ctx.p, digits);
    Integer u = std::move(unit);
    if (u < 0 || u >= mod) {
        u %= mod;
        if (u < 0)
            u += mod;
    }
    if (u == 0)
        return zero_to_precision(ctx, valuation + digits);

    // Pull p-factors out of the unit; absolute precision v + digits is kept.
    long shift = vp(u, ctx.p);
    if (shift > 0) {
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(),
                     ctx.pow_p(shift).get_mpz_t());
        valuation += shift;
        digits -= shift;
    }
    // storage cap: at most M+G relative digits are ever carried
    if (digits > ctx.working_precision()) {
        digits = ctx.working_precision();
        u %= ctx.pow_p(digits);
        if (u == 0)
            return zero_to_precision(ctx, valuation + digits);
    }
    return PadicNumber(ctx, false, valuation, std::move(u), digits);
}

PadicNumber PadicNumber::from_integer(const Integer& n, const PadicContext& ctx) {
    if (n == 0)
        return zero(ctx);
    return from_parts(ctx, 0, n, ctx.working_precision() + static_cast<int>(vp(n, ctx.p)));
}

PadicNumber PadicNumber::from_integer(long n, const PadicContext& ctx) {
    return from_integer(Integer(n), ctx);
}

PadicNumber PadicNumber::from_rational(const Rational& q, const PadicContext& ctx) {
    if (q == 0)
        return zero(ctx);
    Integer num = q.get_num();
    Integer den = q.get_den();
    long vn = vp(num, ctx.p);
    long vd = den == 1 ? 0 : vp(den, ctx.p);
    long v = vn - vd;
    if (vn > 0)
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), ctx.pow_p(vn).get_mpz_t());
    if (vd > 0)
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), ctx.pow_p(vd).get_mpz_t());
    Integer mod = ctx.working_modulus();
    Integer u = (num % mod) * invert_mod(den, mod) % mod;
    return from_parts(ctx, v, std::move(u), ctx.working_precision());
}

long PadicNumber::valuation() const {
    if (exact_zero_)
        throw domain_error("valuation: exact zero has valuation +infinity");
    return valuation_;
}

long PadicNumber::absolute_precision() const {
    if (exact_zero_)
        throw domain_error("absolute_precision: exact zero is known to all digits");
    return valuation_ + known_digits_;
}

void PadicNumber::check_same_context(const PadicNumber& rhs) const {
    if (!(ctx_ == rhs.ctx_))
        throw domain_error("PadicNumber: context mismatch");
}

PadicNumber PadicNumber::operator-() const {
    if (exact_zero_ || known_digits_ == 0)
        return *this;
    Integer mod = ctx_.pow_p(known_digits_);
    return PadicNumber(ctx_, false, valuation_, mod - unit_, known_digits_);
}

PadicNumber PadicNumber::operator+(const PadicNumber& rhs) const {
    check_same_context(rhs);
    if (exact_zero_)
        return rhs;
    if (rhs.exact_zero_)
        return *this;

    // absolute precision of the sum
    long abs_a = valuation_ + known_digits_;
    long abs_b = rhs.valuation_ + rhs.known_digits_;
    long abs = std::min(abs_a, abs_b);

    if (known_digits_ == 0 && rhs.known_digits_ == 0)
        return zero_to_precision(ctx_, abs);
    if (known_digits_ == 0)
        return from_parts(ctx_, rhs.valuation_, rhs.unit_,
                          static_cast<int>(abs - rhs.valuation_));
    if (rhs.known_digits_ == 0)
        return from_parts(ctx_, valuation_, unit_, static_cast<int>(abs - valuation_));

    long v_min = std::min(valuation_, rhs.valuation_);
    long rel = abs - v_min;
    if (rel <= 0)
        return zero_to_precision(ctx_, abs);

    Integer mod = ctx_.pow_p(rel);
    Integer s = unit_ * ctx_.pow_p(valuation_ - v_min)
              + rhs.unit_ * ctx_.pow_p(rhs.valuation_ - v_min);
    s %= mod;
    return from_parts(ctx_, v_min, std::move(s), static_cast<int>(rel));
}

PadicNumber PadicNumber::operator-(const PadicNumber& rhs) const {
    return *this + (-rhs);
}

PadicNumber PadicNumber::operator*(const PadicNumber& rhs) const {
    check_same_context(rhs);
    if (exact_zero_ || rhs.exact_zero_)
        return zero(ctx_);
    if (known_digits_ == 0 || rhs.known_digits_ == 0)
        return zero_to_precision(ctx_, valuation_ + rhs.valuation_);
    int digits = std::min(known_digits_, rhs.known_digits_);
    Integer u = unit_ * rhs.unit_ % ctx_.pow_p(digits);
    return from_parts(ctx_, valuation_ + rhs.valuation_, std::move(u), digits);
}

PadicNumber PadicNumber::inverse() const {
    if (exact_zero_)
        throw domain_error("inverse: division by exact zero");
    if (known_digits_ == 0)
        throw precision_error("inverse: value is indistinguishable from zero; "
                              "raise guard digits");
    Integer mod = ctx_.pow_p(known_digits_);
    return PadicNumber(ctx_, false, -valuation_, invert_mod(unit_, mod), known_digits_);
}

PadicNumber PadicNumber::operator/(const PadicNumber& rhs) const {
    check_same_context(rhs);
    if (rhs.exact_zero_)
        throw domain_error("division by exact zero");
    if (rhs.known_digits_ == 0)
        throw precision_error("division by a value indistinguishable from zero; "
                              "raise guard digits");
    if (exact_zero_)
        return zero(ctx_);
    if (known_digits_ == 0)
        return zero_to_precision(ctx_, valuation_ - rhs.valuation_);
    int digits = std::min(known_digits_, rhs.known_digits_);
    Integer mod = ctx_.pow_p(digits);
    Integer u = unit_ * invert_mod(rhs.unit_, mod) % mod;
    return from_parts(ctx_, valuation_ - rhs.valuation_, std::move(u), digits);
}

PadicNumber PadicNumber::pow(long e) const {
    if (e == 0)
        return from_integer(1, ctx_);
    if (exact_zero_) {
        if (e < 0)
            throw domain_error("pow: negative power of exact zero");
        return *this;
    }
    if (e < 0)
        return inverse().pow(-e);
    if (known_digits_ == 0)
        return zero_to_precision(ctx_, valuation_ * e);
    Integer mod = ctx_.pow_p(known_digits_);
    Integer u;
    mpz_powm_ui(u.get_mpz_t(), unit_.get_mpz_t(), static_cast<unsigned long>(e),
                mod.get_mpz_t());
    return from_parts(ctx_, valuation_ * e, std::move(u), known_digits_);
}

bool PadicNumber::is_zero_mod(int k) const {
    if (exact_zero_)
        return true;
    if (known_digits_ == 0) {
        if (valuation_ >= k)
            return true;
        throw precision_error("is_zero_mod: only known to vanish mod p^" +
                              std::to_string(valuation_) + ", asked mod p^" +
                              std::to_string(k));
    }
    return valuation_ >= k;
}

Integer PadicNumber::residue_mod(int k) const {
    if (exact_zero_)
        return Integer(0);
    if (known_digits_ == 0) {
        if (valuation_ >= k)
            return Integer(0);
        throw precision_error("residue_mod: insufficient precision");
    }
    if (valuation_ < 0)
        throw domain_error("residue_mod: negative valuation, not in Z_p");
    if (valuation_ >= k)
        return Integer(0);
    if (valuation_ + known_digits_ < k)
        throw precision_error("residue_mod: insufficient precision for p^" +
                              std::to_string(k));
    return unit_ * ctx_.pow_p(valuation_) % ctx_.pow_p(k);
}

bool PadicNumber::congruent_mod(const PadicNumber& rhs, int k) const {
    return (*this - rhs).is_zero_mod(k);
}

std::vector<long> PadicNumber::digit_vector() const {
    std::vector<long> out;
    Integer u = unit_;
    for (int i = 0; i < known_digits_; ++i) {
        out.push_back(mpz_fdiv_ui(u.get_mpz_t(), static_cast<unsigned long>(ctx_.p)));
        mpz_fdiv_q_ui(u.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(ctx_.p));
    }
    return out;
}

std::string PadicNumber::to_string() const {
    std::ostringstream os;
    if (exact_zero_) {
        os << "0";
    } else if (known_digits_ == 0) {
        os << "O(" << ctx_.p << "^" << valuation_ << ")";
    } else {
        os << unit_.get_str();
        if (valuation_ != 0)
            os << "*" << ctx_.p << "^" << valuation_;
        os << " + O(" << ctx_.p << "^" << valuation_ + known_digits_ << ")";
    }
    return os.str();
}

PadicNumber teichmuller(const Integer& a, const PadicContext& ctx) {
    if (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(ctx.p)))
        throw domain_error("teichmuller: argument divisible by p");
    int w = ctx.working_precision();
    Integer mod = ctx.working_modulus();
    Integer x = a % mod;
    if (x < 0)
        x += mod;
    // x -> x^p gains one certified digit per step; w+2 steps always reach
    // the fixed point at working precision.
    for (int i = 0; i < w + 2; ++i) {
        Integer next;
        mpz_powm_ui(next.get_mpz_t(), x.get_mpz_t(),
                    static_cast<unsigned long>(ctx.p), mod.get_mpz_t());
        if (next == x)
            break;
        x = next;
    }
    return PadicNumber::from_parts(ctx, 0, std::move(x), w);
}

PadicNumber teichmuller(long a, const PadicContext& ctx) {
    return teichmuller(Integer(a), ctx);
}

std::pair<PadicNumber, PadicNumber> angle_omega_v(const Rational& x,
                                                  const PadicContext& ctx) {
    if (x == 0)
        throw domain_error("angle_omega_v: x must be nonzero");
    long v = vp(x, ctx.p);
    Rational unit_part = x / rational_pow(Rational(ctx.p), v);
    PadicNumber u = PadicNumber::from_rational(unit_part, ctx);
    PadicNumber omega = teichmuller(u.unit(), ctx);
    PadicNumber angle = u / omega;
    PadicNumber omega_v = PadicNumber::from_parts(ctx, v, omega.unit(), omega.known_digits());
    return {angle, omega_v};
}

PadicNumber binom_coeff(const PadicNumber& s, long i) {
    const PadicContext& ctx = s.context();
    if (i < 0)
        throw domain_error("binom_coeff: i must be >= 0");
    PadicNumber acc = PadicNumber::from_integer(1, ctx);
    for (long j = 0; j < i; ++j)
        acc = acc * (s - PadicNumber::from_integer(j, ctx));
    if (acc.is_exact_zero())
        return acc;
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(i));
    acc = acc / PadicNumber::from_integer(fact, ctx);
    if (!acc.is_exact_zero() && acc.absolute_precision() < 1)
        throw precision_error("binom_coeff: precision exhausted by division by i!; "
                              "raise guard digits");
    return acc;
}

namespace {

bool provably_below(const PadicNumber& term, long bound) {
    return term.is_exact_zero() || term.valuation() >= bound;
}

} // namespace

PadicNumber power_angle(const PadicNumber& base_angle, const PadicNumber& s) {
    const PadicContext& ctx = base_angle.context();
    if (base_angle.is_exact_zero() || base_angle.is_precision_zero() ||
        base_angle.valuation() != 0)
        throw domain_error("power_angle: base must be a unit congruent to 1 mod p");
    if (mpz_fdiv_ui(base_angle.unit().get_mpz_t(),
                    static_cast<unsigned long>(ctx.p)) != 1)
        throw domain_error("power_angle: base must be congruent to 1 mod p");
    PadicNumber one = PadicNumber::from_integer(1, ctx);
    if (s.is_exact_zero())
        return one;
    if (s.is_precision_zero()) {
        // s = O(p^E): base^s = 1 + O(p^{E+1}) since every term
        // binom(s,n)(base-1)^n for n >= 1 has valuation >= E + n - v_p(n!).
        long e = s.valuation();
        if (e < 1)
            throw precision_error("power_angle: exponent known to too few digits");
        return PadicNumber::from_parts(
            ctx, 0, Integer(1),
            static_cast<int>(std::min<long>(ctx.working_precision(), e + 1)));
    }
    if (s.valuation() < 0)
        throw domain_error("power_angle: exponent must lie in Z_p "
                           "(|s| < R_p restricted to Q_p)");

    long w = ctx.working_precision();
    long i_max = series_truncation_bound(ctx.p, static_cast<int>(w));
    PadicNumber t = base_angle - one; // valuation >= 1
    PadicNumber acc = one;
    PadicNumber coeff = one;  // binom(s, i)
    PadicNumber tpow = one;   // t^i
    PadicNumber prev_term = one;
    PadicNumber last_term = one;
    for (long i = 1; i <= i_max; ++i) {
        coeff = coeff * (s - PadicNumber::from_integer(i - 1, ctx))
                      / PadicNumber::from_integer(i, ctx);
        if (coeff.is_exact_zero())
            return acc; // integer exponent: series terminates exactly
        tpow = tpow * t;
        PadicNumber term = coeff * tpow;
        acc = acc + term;
        prev_term = last_term;
        last_term = term;
        if (term.is_exact_zero() && tpow.is_exact_zero())
            return acc; // base was exactly 1
    }
    if (!provably_below(prev_term, w) || !provably_below(last_term, w))
        throw convergence_error("power_angle: series did not settle below the "
                                "working threshold");
    return acc;
}

} // namespace pel
