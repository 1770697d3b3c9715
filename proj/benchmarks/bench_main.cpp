#include <benchmark/benchmark.h>

#include "qlandscape/landscape.hpp"
#include "qlandscape/optimizer.hpp"

using namespace qlandscape;

namespace {

ControlTask reference_task(double T) {
    return ControlTask(QubitSystem::planar(1.0, 0.0), Hermitian2{0.5, {0.0, 0.5, 0.0}},
                       Hermitian2{0.5, {0.5 / std::sqrt(2.0), 0.5 / std::sqrt(2.0), 0.0}}, T);
}

void BM_propagate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ControlTask task = reference_task(0.6 * M_PI);
    ControlGrid grid = random_initial_control(task.T, n, 7, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(propagate(task.system, grid).final);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_propagate)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_gradient(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ControlTask task = reference_task(0.6 * M_PI);
    ControlGrid grid = random_initial_control(task.T, n, 7, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(gradient(task, grid));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_gradient)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_hessian_spectrum(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const HessianKernelSpec spec = build_kernel_spec(reference_task(0.6 * M_PI));
    for (auto _ : state) benchmark::DoNotOptimize(hessian_spectrum(spec, n));
}
BENCHMARK(BM_hessian_spectrum)->Arg(64)->Arg(128)->Arg(256);

void BM_quadratic_form_bump(benchmark::State& state) {
    const HessianKernelSpec spec = build_kernel_spec(reference_task(0.6 * M_PI));
    ControlGrid grid(spec.T, 2000, 0.0);
    const double eps = 20.0 * grid.dt();
    const ControlGrid bump = bump_control(0.3 * spec.T, eps, grid);
    for (auto _ : state) benchmark::DoNotOptimize(quadratic_form(spec, bump));
}
BENCHMARK(BM_quadratic_form_bump);

} // namespace

BENCHMARK_MAIN();
