#include <benchmark/benchmark.h>

#include "pel/euler.hpp"
#include "pel/padic.hpp"

using namespace pel;

static void BM_FromRational(benchmark::State& state) {
    PadicContext ctx = make_context(5, 6);
    Rational q(691, 4);
    for (auto _ : state) {
        auto x = PadicNumber::from_rational(q, ctx);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_FromRational);

static void BM_MulDiv(benchmark::State& state) {
    PadicContext ctx = make_context(5, 6);
    auto a = PadicNumber::from_rational(Rational(691, 4), ctx);
    auto b = PadicNumber::from_rational(Rational(17, 8), ctx);
    for (auto _ : state) {
        auto x = a * b / a;
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_MulDiv);

static void BM_Teichmuller(benchmark::State& state) {
    PadicContext ctx = make_context(7, state.range(0));
    for (auto _ : state) {
        auto t = teichmuller(3, ctx);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_Teichmuller)->Arg(6)->Arg(12)->Arg(24);

static void BM_PowerAngle(benchmark::State& state) {
    PadicContext ctx = make_context(5, 6);
    auto [angle, omega_v] = angle_omega_v(Rational(2), ctx);
    auto s = PadicNumber::from_rational(Rational(1234), ctx);
    for (auto _ : state) {
        auto x = power_angle(angle, s);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_PowerAngle);

static void BM_EulerPolynomial(benchmark::State& state) {
    for (auto _ : state) {
        // the cache makes steady-state cost the lookup; degree growth is the
        // interesting number on a cold cache, so evaluate instead
        auto v = euler_polynomial(static_cast<int>(state.range(0)))(Rational(1, 3));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_EulerPolynomial)->Arg(20)->Arg(60)->Arg(120);
