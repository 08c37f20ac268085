#include <benchmark/benchmark.h>

#include "fuchs/linalg.hpp"
#include "fuchs/modular.hpp"

#include <random>

using namespace fuchs;

namespace {

QMatrix random_matrix(size_t rows, size_t cols, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
    QMatrix M(rows, QVec(cols));
    for (auto& row : M)
        for (auto& x : row) {
            x = Rat(num(rng), den(rng));
            x.canonicalize();
        }
    return M;
}

}  // namespace

static void NullspaceBareiss(benchmark::State& state) {
    const size_t n = state.range(0);
    QMatrix M = random_matrix(n, n + 3, 42);
    for (auto _ : state) {
        auto basis = rational_nullspace(M);
        benchmark::DoNotOptimize(basis);
    }
    state.SetComplexityN(n);
}
BENCHMARK(NullspaceBareiss)->RangeMultiplier(2)->Range(4, 32)->Complexity();

static void RationalReconstructRoundTrip(benchmark::State& state) {
    Int modulus("2305843009213693951");
    Int bound(1000000);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(1, 999983);
    for (auto _ : state) {
        Int p(num(rng)), q(num(rng) | 1);
        Int qinv;
        mpz_invert(qinv.get_mpz_t(), q.get_mpz_t(), modulus.get_mpz_t());
        Int residue = (p * qinv) % modulus;
        auto r = rational_reconstruct(residue, modulus, bound);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(RationalReconstructRoundTrip);

static void ModularInverse(benchmark::State& state) {
    PrimeField F(modular_primes(1)[0]);
    uint64_t x = 1234567891234567ull;
    for (auto _ : state) {
        x = F.inv(x % F.p);
        benchmark::DoNotOptimize(x);
        x += 3;
    }
}
BENCHMARK(ModularInverse);

BENCHMARK_MAIN();
