#include <benchmark/benchmark.h>

#include "sr1lab/linalg.hpp"
#include "sr1lab/rng.hpp"

namespace {

using namespace sr1lab;

SymMatrix make_spd(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Vector d(n);
    for (int i = 0; i < n; ++i) d[i] = rng.uniform(1.0, 100.0);
    SymMatrix a = SymMatrix::diagonal(d);
    for (int r = 0; r < 4; ++r) {
        Vector v(n);
        double vv = 0.0;
        for (int j = 0; j < n; ++j) {
            v[j] = rng.gaussian();
            vv += v[j] * v[j];
        }
        const Vector av = a.matvec(v);
        const double vav = dot(v, av);
        const double c = 2.0 / vv;
        SymMatrix next = a;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j)
                next.add(i, j, -c * (av[i] * v[j] + v[i] * av[j]) + c * c * vav * v[i] * v[j]);
        a = std::move(next);
    }
    return a;
}

void BM_Cholesky(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SymMatrix m = make_spd(n, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cholesky(m));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Cholesky)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_Eigvals(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SymMatrix m = make_spd(n, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigvals_sym(m));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Eigvals)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_RankOneUpdate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SymMatrix m = make_spd(n, 7);
    SplitMix64 rng(11);
    Vector v(n);
    for (int j = 0; j < n; ++j) v[j] = rng.gaussian();
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank_one_update(m, 0.5, v));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_RankOneUpdate)->RangeMultiplier(2)->Range(8, 256)->Complexity();

}  // namespace
