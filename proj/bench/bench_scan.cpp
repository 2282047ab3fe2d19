// bench_scan.cpp — OpenMP kernels vs the serial reference: protocol search,
// external-swap census, parameter sweep, and regime map.

#include <benchmark/benchmark.h>

#include "qotto/search.hpp"
#include "qotto/state.hpp"
#include "qotto/sweep.hpp"

namespace {

qotto::SearchTask scan_task(qotto::SearchObjective objective, bool parallel) {
    qotto::SearchTask task;
    task.d = 2;
    task.mode = qotto::EnumerationMode::Transpositions;
    task.objective = objective;
    task.hot = qotto::thermal_qubit(0.3, 1.0);
    task.cold = qotto::thermal_qubit(3.0, 0.5);
    task.parallel = parallel;
    return task;
}

void BM_search_work(benchmark::State& state) {
    const auto task = scan_task(qotto::SearchObjective::MaxWork, state.range(0) != 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qotto::optimize(task));
    }
}
BENCHMARK(BM_search_work)->Arg(0)->Arg(1)->ArgNames({"parallel"});

void BM_search_efficiency(benchmark::State& state) {
    const auto task =
        scan_task(qotto::SearchObjective::MaxEfficiency, state.range(0) != 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qotto::optimize(task));
    }
}
BENCHMARK(BM_search_efficiency)->Arg(0)->Arg(1)->ArgNames({"parallel"});

void BM_census(benchmark::State& state) {
    const auto hot = qotto::thermal_qubit(0.3, 1.0);
    const auto cold = qotto::thermal_qubit(3.0, 0.5);
    const bool parallel = state.range(0) != 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qotto::external_swap_census(2, hot, cold, 1e-12, parallel));
    }
}
BENCHMARK(BM_census)->Arg(0)->Arg(1)->ArgNames({"parallel"});

void BM_sweep(benchmark::State& state) {
    qotto::SweepSpec spec;
    spec.variable = qotto::SweepSpec::Variable::OmegaRatio;
    spec.from = 0.05;
    spec.to = 0.95;
    spec.steps = 400;
    spec.d = 2;
    spec.beta_ratio = 10.0;
    const bool parallel = state.range(0) != 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qotto::run_sweep(spec, parallel));
    }
}
BENCHMARK(BM_sweep)->Arg(0)->Arg(1)->ArgNames({"parallel"});

void BM_regime_map(benchmark::State& state) {
    qotto::RegimeMapSpec spec;
    spec.resolution = 48;
    spec.d_max = 6;
    const bool parallel = state.range(0) != 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qotto::regime_map(spec, parallel));
    }
}
BENCHMARK(BM_regime_map)->Arg(0)->Arg(1)->ArgNames({"parallel"});

}  // namespace

BENCHMARK_MAIN();
