#include <benchmark/benchmark.h>

#include "sr1lab/data.hpp"
#include "sr1lab/rng.hpp"
#include "sr1lab/solvers.hpp"

namespace {

using namespace sr1lab;

void BM_QuadraticSolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const QuadraticProblem p = gen_quadratic(n, 1000.0, 21);
    SplitMix64 rng(22);
    Vector x0(n);
    for (int j = 0; j < n; ++j) x0[j] = rng.gaussian();
    SolverConfig cfg;
    cfg.grad_tol = 1e-8 * norm(p.gradient(x0));
    cfg.max_iters = 4 * n;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_quadratic_sr1(p, x0, cfg));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_QuadraticSolve)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_LogisticCsStep(benchmark::State& state) {
    const Dataset d = gen_synthetic_logistic(200, static_cast<int>(state.range(0)), 31, 1.0);
    const LogisticProblem p = make_logistic_problem(d);
    const Vector x0 = newton_warm_start(p, Vector(p.dimension(), 0.0), 3);
    SolverConfig cfg;
    cfg.max_iters = 8;
    cfg.grad_tol = 1e-15;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_sr1_cs(p, x0, cfg));
    }
}
BENCHMARK(BM_LogisticCsStep)->Arg(10)->Arg(30);

}  // namespace
