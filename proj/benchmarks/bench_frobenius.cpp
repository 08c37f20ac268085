#include <benchmark/benchmark.h>

#include "fuchs/frobenius.hpp"

using namespace fuchs;

namespace {

FuchsianODE gauss_ode() {
    Rat a(1, 3), b(1, 5), c(1, 2);
    return FuchsianODE({Poly{-a * b}, Poly{c, -(a + b + Rat(1))}, Poly{Rat(0), Rat(1), Rat(-1)}});
}

}  // namespace

static void LocalBasisConstruction(benchmark::State& state) {
    FuchsianODE g = gauss_ode();
    const long T = state.range(0);
    for (auto _ : state) {
        LocalBasis b = local_basis(g, LocalPoint::at(Rat(0)), T);
        benchmark::DoNotOptimize(b);
    }
    state.SetComplexityN(T);
}
BENCHMARK(LocalBasisConstruction)->RangeMultiplier(2)->Range(32, 512)->Complexity();

static void EvaluateBasisJets(benchmark::State& state) {
    FuchsianODE g = gauss_ode();
    const long digits = state.range(0);
    // enough terms for ratio 1/2 at the requested precision
    const long T = static_cast<long>((digits + 25) * 3.33) + 16;
    LocalBasis b = local_basis(g, LocalPoint::at(Rat(0)), T);
    const mpfr_prec_t bits = bits_for_digits(digits + 15);
    BigComplex z(BigFloat(Rat(1, 2), bits), BigFloat(bits));
    for (auto _ : state) {
        auto ev = evaluate_basis(b, z, digits);
        benchmark::DoNotOptimize(ev);
    }
    state.SetComplexityN(digits);
}
BENCHMARK(EvaluateBasisJets)->RangeMultiplier(2)->Range(25, 200)->Complexity();

static void ResonantLogBasis(benchmark::State& state) {
    // the resonant case exercises the log-block solver
    Rat a(1, 2), b(1, 2), c(1);
    FuchsianODE g({Poly{-a * b}, Poly{c, -(a + b + Rat(1))}, Poly{Rat(0), Rat(1), Rat(-1)}});
    const long T = state.range(0);
    for (auto _ : state) {
        LocalBasis basis = local_basis(g, LocalPoint::at(Rat(0)), T);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(ResonantLogBasis)->RangeMultiplier(2)->Range(32, 256);

BENCHMARK_MAIN();
