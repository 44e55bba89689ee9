#include <benchmark/benchmark.h>

#include "ttmrhs/ttmrhs.hpp"

namespace {

using namespace ttmrhs;

// Diagonally dominant so every solver stays finite at large orders.
TridiagToeplitz dominant(std::size_t n) { return {n, 1.0, 4.0, 1.0}; }

template <DenseMatrix (*Solve)(const TridiagToeplitz&, const DenseMatrix&)>
void BM_SingleColumn(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const TridiagToeplitz t = dominant(n);
    const DenseMatrix b = DenseMatrix::ones(n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(Solve(t, b));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SingleColumn<thomas_solve>)->Name("thomas")->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN);
BENCHMARK(BM_SingleColumn<block_lu_solve>)->Name("block_lu")->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN);
BENCHMARK(BM_SingleColumn<row_cycled_solve>)->Name("row_cycled")->Arg(64)->Arg(1024);

void BM_Alg1(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = static_cast<std::size_t>(state.range(1));
    const TridiagToeplitz t = dominant(n);
    const DenseMatrix b = DenseMatrix::ones(n, m);
    for (auto _ : state) benchmark::DoNotOptimize(solve_mrhs(t, b).x);
}
BENCHMARK(BM_Alg1)->ArgsProduct({{1000, 10000}, {2, 8, 32}});

void BM_Columnwise(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = static_cast<std::size_t>(state.range(1));
    const TridiagToeplitz t = dominant(n);
    const DenseMatrix b = DenseMatrix::ones(n, m);
    for (auto _ : state) benchmark::DoNotOptimize(columnwise_solve(t, b));
}
BENCHMARK(BM_Columnwise)->ArgsProduct({{1000, 10000}, {2, 8, 32}});

}  // namespace
BENCHMARK_MAIN();
