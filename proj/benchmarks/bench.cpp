#include <benchmark/benchmark.h>

#include <vector>

#include "tunnelsplit/oracle.hpp"
#include "tunnelsplit/semiclassical.hpp"

namespace ts = tunnelsplit;

namespace {

ts::PotentialProfile quartic(double hbar) {
    return ts::analyze_profile(ts::Expression::parse("(q^2-1)^2"),
                               ts::PhysicalContext{1.0, hbar});
}

void BM_expression_eval(benchmark::State& state) {
    const auto expr = ts::Expression::parse("(q^2-1)^2*(1+q^2/2)");
    double q = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(expr.eval(q));
        q = q < 1.9 ? q + 1e-6 : 0.1;
    }
}
BENCHMARK(BM_expression_eval);

void BM_separatrix_area(benchmark::State& state) {
    const auto p = quartic(0.2);
    for (auto _ : state) benchmark::DoNotOptimize(ts::separatrix_area(p));
}
BENCHMARK(BM_separatrix_area);

void BM_ground_splitting(benchmark::State& state) {
    const auto p = quartic(0.2);
    for (auto _ : state) benchmark::DoNotOptimize(ts::ground_splitting(p));
}
BENCHMARK(BM_ground_splitting);

void BM_period_exact(benchmark::State& state) {
    const auto p = quartic(0.2);
    for (auto _ : state) benchmark::DoNotOptimize(ts::period_exact(p, 1e-3));
}
BENCHMARK(BM_period_exact);

void BM_eigen_splitting(benchmark::State& state) {
    const auto p = quartic(0.2);
    ts::GridConfig grid;
    grid.n_points = static_cast<int>(state.range(0));
    grid.refinement_levels = 1;
    for (auto _ : state) benchmark::DoNotOptimize(ts::eigen_splitting(p, grid));
}
BENCHMARK(BM_eigen_splitting)->Arg(1024)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
