#pragma once

// Internal engine for stabilizing alternating sums
//   S_N = sum_{a < span * p^N, (p excluded)} (-1)^a t(a),
// shared by the fermionic integral and the L-function limit routes.
// Stabilization rule: S_N = S_{N-1} (mod p^M) twice consecutively.

#include <cstdint>
#include <vector>

#include "pel/fermionic.hpp"
#include "pel/padic.hpp"

namespace pel::detail {

struct LimitOptions {
    long span = 1;            // sum over [0, span * p^N)
    bool units_only = false;  // drop p | a
    int level_cap = 0;        // <= 0: default M + 4
    int continuity = 0;       // contract constant c, widens the default cap
};

// Integer-residue path: terms arrive as residues mod p^W via
// term(a, out); out = 0 skips. The partial sums are exact integers and the
// snapshots carry full working precision.
template <typename TermFn>
IntegrationResult alternating_limit_integer(const PadicContext& ctx,
                                            const LimitOptions& opt, TermFn&& term) {
    const long p = ctx.p;
    const int w = ctx.working_precision();
    const Integer mod = ctx.working_modulus();
    int cap = opt.level_cap > 0
                  ? opt.level_cap
                  : ctx.target_precision + opt.continuity + 4;

    std::vector<StabilizationStep> trace;
    Integer acc(0), t;
    std::uint64_t done = 0;
    int agreements = 0;
    PadicNumber prev = PadicNumber::zero(ctx);

    for (int level = 1; level <= cap; ++level) {
        std::uint64_t hi = opt.span;
        for (int i = 0; i < level; ++i) {
            if (hi > (std::uint64_t(1) << 62) / static_cast<std::uint64_t>(p))
                throw convergence_error("alternating_limit: summation range "
                                        "exceeds the engine's 64-bit window");
            hi *= static_cast<std::uint64_t>(p);
        }
        for (std::uint64_t a = done; a < hi; ++a) {
            if (opt.units_only && a % static_cast<std::uint64_t>(p) == 0)
                continue;
            term(a, t);
            if (t == 0)
                continue;
            if (a & 1)
                acc -= t;
            else
                acc += t;
        }
        acc %= mod;
        if (acc < 0)
            acc += mod;
        done = hi;

        PadicNumber snapshot = PadicNumber::from_parts(ctx, 0, acc, w);
        trace.push_back({level, snapshot});
        if (level > 1) {
            if (snapshot.congruent_mod(prev, ctx.target_precision))
                ++agreements;
            else
                agreements = 0;
            if (agreements >= 2)
                return IntegrationResult{
                    PadicNumber::from_parts(ctx, 0, acc, ctx.target_precision),
                    "limit", std::move(trace)};
        }
        prev = snapshot;
    }
    throw convergence_error("alternating_limit: no stabilization by level " +
                            std::to_string(cap) +
                            " (violated continuity contract?)");
}

// PadicNumber path for generic callbacks: maintains value = p^{scale} * acc
// and rescales when a term with smaller valuation arrives.
template <typename TermFn>
IntegrationResult alternating_limit_padic(const PadicContext& ctx,
                                          const LimitOptions& opt, TermFn&& term) {
    const long p = ctx.p;
    const int w = ctx.working_precision();
    int cap = opt.level_cap > 0
                  ? opt.level_cap
                  : ctx.target_precision + opt.continuity + 4;

    std::vector<StabilizationStep> trace;
    Integer acc(0);
    long scale = 0;       // value = p^scale * acc
    long cert = w;        // certified digits above scale
    bool cert_capped = false;
    std::uint64_t done = 0;
    int agreements = 0;
    PadicNumber prev = PadicNumber::zero(ctx);

    for (int level = 1; level <= cap; ++level) {
        std::uint64_t hi = opt.span;
        for (int i = 0; i < level; ++i) {
            if (hi > (std::uint64_t(1) << 62) / static_cast<std::uint64_t>(p))
                throw convergence_error("alternating_limit: summation range "
                                        "exceeds the engine's 64-bit window");
            hi *= static_cast<std::uint64_t>(p);
        }
        Integer mod = ctx.pow_p(cert);
        for (std::uint64_t a = done; a < hi; ++a) {
            if (opt.units_only && a % static_cast<std::uint64_t>(p) == 0)
                continue;
            PadicNumber v = term(a, level);
            if (v.is_exact_zero())
                continue;
            if (v.is_precision_zero()) {
                // contributes nothing measurable but bounds the certainty
                long rel = v.valuation() - scale;
                if (rel < cert) {
                    cert = rel;
                    cert_capped = true;
                    if (cert <= 0)
                        throw precision_error("alternating_limit: a term is "
                                              "indistinguishable from zero at "
                                              "working precision");
                    mod = ctx.pow_p(cert);
                    acc %= mod;
                }
                continue;
            }
            if (v.valuation() < scale) {
                long up = scale - v.valuation();
                acc *= ctx.pow_p(up);
                scale = v.valuation();
                cert += up;
                if (cert > w && !cert_capped)
                    cert = w; // storage cap; certainty tracked by terms below
                mod = ctx.pow_p(cert);
                acc %= mod;
            }
            long rel_prec = v.valuation() + v.known_digits() - scale;
            if (rel_prec < cert) {
                cert = rel_prec;
                cert_capped = true;
                if (cert <= 0)
                    throw precision_error("alternating_limit: term precision "
                                          "exhausted the accumulator");
                mod = ctx.pow_p(cert);
                acc %= mod;
            }
            if (v.valuation() == scale) {
                if (a & 1)
                    acc -= v.unit();
                else
                    acc += v.unit();
            } else {
                Integer contrib = v.unit() * ctx.pow_p(v.valuation() - scale);
                if (a & 1)
                    acc -= contrib;
                else
                    acc += contrib;
            }
        }
        acc %= mod;
        if (acc < 0)
            acc += mod;
        done = hi;

        PadicNumber snapshot =
            PadicNumber::from_parts(ctx, scale, acc, static_cast<int>(cert));
        trace.push_back({level, snapshot});
        if (level > 1) {
            if (snapshot.congruent_mod(prev, ctx.target_precision))
                ++agreements;
            else
                agreements = 0;
            if (agreements >= 2)
                return IntegrationResult{
                    PadicNumber::from_parts(
                        ctx, scale, acc,
                        static_cast<int>(ctx.target_precision - scale)),
                    "limit", std::move(trace)};
        }
        prev = snapshot;
    }
    throw convergence_error("alternating_limit: no stabilization by level " +
                            std::to_string(cap) +
                            " (violated continuity contract?)");
}

} // namespace pel::detail
