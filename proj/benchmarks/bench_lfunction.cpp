#include <benchmark/benchmark.h>

#include "pel/lfunction.hpp"

using namespace pel;

static void BM_HurwitzZeta(benchmark::State& state) {
    PadicContext ctx = make_context(5, 6);
    auto s = PadicNumber::from_integer(-3, ctx);
    CZpPoint x(Integer(2), 15, 5);
    for (auto _ : state) {
        auto v = hurwitz_euler_zeta(s, x, ctx);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_HurwitzZeta);

static void BM_LpEval(benchmark::State& state) {
    PadicContext ctx = make_context(5, 6);
    auto chi = quadratic_character(3);
    auto s = PadicNumber::from_integer(1 - state.range(0), ctx);
    for (auto _ : state) {
        auto v = lp_eval(chi, s, ctx);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_LpEval)->Arg(1)->Arg(4);

static void BM_FermionicPartialSums(benchmark::State& state) {
    PadicContext ctx(5, static_cast<int>(state.range(0)), 2);
    auto spec = IntegrandSpec::polynomial(RationalPolynomial::monomial(4));
    for (auto _ : state) {
        auto r = integrate_zp_limit(spec, ctx);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_FermionicPartialSums)->Arg(3)->Arg(4)->Arg(5);

static void BM_AltPowerSum(benchmark::State& state) {
    auto chi = quadratic_character(3);
    for (auto _ : state) {
        auto v = alt_power_sum(chi, state.range(0), Rational(1, 2), 15);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_AltPowerSum)->Arg(6)->Arg(12);
