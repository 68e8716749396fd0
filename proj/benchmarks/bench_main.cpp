#include <benchmark/benchmark.h>

#include "eisen/divisor.hpp"
#include "eisen/double_shuffle.hpp"
#include "eisen/eisenstein.hpp"
#include "eisen/formal_dz.hpp"
#include "eisen/gamma_solver.hpp"

using namespace eisen;

namespace {

void BM_CyclotomicInverse(benchmark::State& st) {
    const long N = st.range(0);
    const CycNum x = CycNum::root_power(N, 1) + CycNum(N, Rational(3));
    for (auto _ : st) benchmark::DoNotOptimize(x.inv());
}
BENCHMARK(BM_CyclotomicInverse)->Arg(5)->Arg(12)->Arg(30);

void BM_SeriesProduct(benchmark::State& st) {
    const long N = st.range(0);
    const int M = static_cast<int>(st.range(1));
    SeriesCache cache(N, M);
    const QSeries a = cache.g(1 % N, 2), b = cache.f2(0);
    for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesProduct)->Args({3, 50})->Args({6, 50})->Args({6, 200});

void BM_DepthTwoSigma(benchmark::State& st) {
    const long N = st.range(0);
    const long m = st.range(1);
    for (auto _ : st) benchmark::DoNotOptimize(sigma_multi(N, {1 % N, 0}, {1, 2}, m));
}
BENCHMARK(BM_DepthTwoSigma)->Args({4, 100})->Args({4, 500});

void BM_Rank(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(rank_and_pivots(st.range(0)));
}
BENCHMARK(BM_Rank)->Arg(6)->Arg(12)->Arg(20);

void BM_SolveZero(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(solve(st.range(0), {}, 50));
}
BENCHMARK(BM_SolveZero)->Arg(3)->Arg(6);

void BM_DoubleShuffle(benchmark::State& st) {
    const long N = st.range(0);
    const auto asg = solve(N, {}, 30).assignment;
    for (auto _ : st) benchmark::DoNotOptimize(verify_double_shuffle(asg, 6, 30));
}
BENCHMARK(BM_DoubleShuffle)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_FormalDimension(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(dz_dim(st.range(0), static_cast<int>(st.range(1)), false));
}
BENCHMARK(BM_FormalDimension)->Args({3, 10})->Args({4, 10})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
