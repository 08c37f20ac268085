#include <benchmark/benchmark.h>

#include "fuchs/guess.hpp"
#include "fuchs/ising.hpp"
#include "fuchs/recognize.hpp"

using namespace fuchs;

static void ChiTildeSeries2(benchmark::State& state) {
    const long T = state.range(0);
    for (auto _ : state) {
        auto s = ising::chi_tilde_series(2, T);
        benchmark::DoNotOptimize(s);
    }
    state.SetComplexityN(T);
}
BENCHMARK(ChiTildeSeries2)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void ChiTildeSeries3(benchmark::State& state) {
    const long T = state.range(0);
    for (auto _ : state) {
        auto s = ising::chi_tilde_series(3, T);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(ChiTildeSeries3)->Arg(10)->Arg(14);

static void GuessChi2(benchmark::State& state) {
    auto s = ising::chi_tilde_series(2, 40);
    for (auto _ : state) {
        auto res = guess::guess_ode(s);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(GuessChi2);

static void GuessChi2Exact(benchmark::State& state) {
    auto s = ising::chi_tilde_series(2, 40);
    guess::GuessOptions opt;
    opt.method = guess::Method::Exact;
    for (auto _ : state) {
        auto res = guess::guess_ode(s, opt);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(GuessChi2Exact);

static void PslqRecognition(benchmark::State& state) {
    const long digits = state.range(0);
    const mpfr_prec_t bits = bits_for_digits(digits + 10);
    BigFloat pi = const_pi(bits);
    std::vector<BigFloat> v{pi / BigFloat(3L, bits) + BigFloat(2L, bits) * pi * pi,
                            BigFloat(1L, bits), pi, pi * pi};
    for (auto _ : state) {
        auto rel = recognize::pslq(v, digits);
        benchmark::DoNotOptimize(rel);
    }
    state.SetComplexityN(digits);
}
BENCHMARK(PslqRecognition)->RangeMultiplier(2)->Range(50, 200)->Complexity();

BENCHMARK_MAIN();
