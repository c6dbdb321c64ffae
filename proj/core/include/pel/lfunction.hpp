#pragma once

#include "pel/characters.hpp"
#include "pel/fermionic.hpp"

namespace pel {

// Point a/m of CZ_p = Q_p \ Z_p: p | m, p does not divide a, so
// v_p(a/m) <= -1. This is the argument domain of the Hurwitz-type series.
struct CZpPoint {
    Integer a;
    long m;

    CZpPoint(Integer a_, long m_, long p);
    Rational to_rational() const { return Rational(a, Integer(m)); }
};

// Validated request for L_{p,E}(chi, s): chi embeddable (order | p-1) with
// odd conductor, v_p(s) >= 0, m = lcm(f_chi, p).
struct LValueRequest {
    DirichletCharacter chi; // primitive
    PadicNumber s;
    PadicContext ctx;
    long m;

    LValueRequest(const DirichletCharacter& chi_, PadicNumber s_, const PadicContext& ctx_);
};

// zeta_{p,E}(s, a/m) = <a/m>^{1-s} sum_{i>=0} binom(1-s, i) E_i (m/a)^i
// for a/m in CZ_p, s in Z_p. Every reported digit is certified by the
// term-valuation bound (the i-th term has valuation >= i).
PadicNumber hurwitz_euler_zeta(const PadicNumber& s, const CZpPoint& x,
                               const PadicContext& ctx);

// L_{p,E}(chi, s) = <m>^{1-s} sum'_{0<=a<m} chi(a) (-1)^a zeta_{p,E}(s, a/m),
// the series route (route tag "series").
PadicNumber lp_eval(const LValueRequest& req);
PadicNumber lp_eval(const DirichletCharacter& chi, const PadicNumber& s,
                    const PadicContext& ctx);

// Closed form at s = 1-k, k >= 1: (1 - p^k chi_k(p)) E_{k,chi_k} with
// chi_k = chi omega^{-k} (primitive). chi must be nontrivial.
PadicNumber lp_neg_closed(const DirichletCharacter& chi, long k,
                          const PadicContext& ctx);

// L_{p,E}(chi, 1) = sum'_{0<=a<m} chi(a) (-1)^a for nontrivial chi.
PadicNumber lp_at_one(const DirichletCharacter& chi, const PadicContext& ctx);

struct LpLimitResult {
    PadicNumber value;
    std::vector<StabilizationStep> trace;
};

// L_{p,E}(chi, k+1) = lim_N sum'_{0<=n<m p^N} chi omega^k(n) (-1)^n / n^k,
// partial restricted sums with double-stabilization detection.
LpLimitResult lp_pos_limit(const DirichletCharacter& chi, long k, int level_cap,
                           const PadicContext& ctx);

// p-adic chi-Euler number E_{k,p,chi} = L_{p,E}(chi omega^k, 1-k)
// (= lim_r E_{Phi(p^r)+k,chi}). Route: closed form (1 - p^k chi(p)) E_{k,chi}
// for k >= 1, the L-series at s = 1-k for k <= 0.
PadicNumber chi_euler_number(long k, const DirichletCharacter& chi,
                             const PadicContext& ctx);

// The limit route as a cross-check: embedded E_{Phi(p^r)+k, chi} for
// r = 1..r_max (entries with negative index are skipped).
std::vector<PadicNumber> chi_euler_limit_trace(long k, const DirichletCharacter& chi,
                                               int r_max, const PadicContext& ctx);

// H_n = sum'_{0<=a<m} chi(a) (-1)^a / a^n with m = lcm(f_chi, p).
PadicNumber h_sum(long n, const DirichletCharacter& chi, const PadicContext& ctx);

// E_{-k,p,chi} via the H-series
// sum_{i>=0} (-1)^i binom(k+i-1, k-1) m^i E_i H_{k+i}, k >= 1.
PadicNumber chi_euler_h_series(long k, const DirichletCharacter& chi,
                               const PadicContext& ctx);

// zeta_{p,E}(s) = L_{p,E}(chi^0, s); identically zero since chi^0 is even.
PadicNumber zeta_p_euler(const PadicNumber& s, const PadicContext& ctx);

} // namespace pel
