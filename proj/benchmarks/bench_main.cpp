#include <benchmark/benchmark.h>

#include "hausdorff/algebra.hpp"
#include "hausdorff/engine.hpp"
#include "hausdorff/funcalc.hpp"
#include "hausdorff/transforms.hpp"

namespace {

using namespace hausdorff;

Grid small_t() { return Grid::over_range(-40.0, 40.0, 1 << 12); }
Grid small_s() { return Grid::over_range(-64.0, 64.0, 1 << 11); }

HausdorffOperator hardy_op(Grid t, Grid s) {
    return HausdorffOperator(Kernel::hardy(), ScalingFunction::reciprocal(), t, s);
}

void BM_fourier_forward(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Grid t = Grid::over_range(-40.0, 40.0, n);
    const Grid s = Grid::over_range(-64.0, 64.0, n / 2);
    const auto g = SampledLine::sample(t, [](double x) { return cd(std::exp(-x * x / 2.0), 0.0); });
    for (auto _ : state) benchmark::DoNotOptimize(fourier_l1(g, s, Direction::forward));
}
BENCHMARK(BM_fourier_forward)->Arg(1 << 12)->Arg(1 << 14);

void BM_convolve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Grid t = Grid::over_range(-40.0, 40.0, n);
    const auto g = SampledLine::sample(t, [](double x) { return cd(std::exp(-x * x / 2.0), 0.0); });
    for (auto _ : state) benchmark::DoNotOptimize(convolve(g, g));
}
BENCHMARK(BM_convolve)->Arg(1 << 12)->Arg(1 << 14);

void BM_compute_symbol(benchmark::State& state) {
    const auto h = hardy_op(Grid::default_t_grid(), Grid::default_s_grid());
    for (auto _ : state) {
        const auto plus = fourier_l1(h.pair().plus_line(), h.s_grid(), Direction::forward);
        benchmark::DoNotOptimize(plus);
    }
}
BENCHMARK(BM_compute_symbol);

void BM_apply_direct(benchmark::State& state) {
    const auto h = hardy_op(small_t(), small_s());
    const auto f = GridFunction::indicator_unit(small_t());
    for (auto _ : state) benchmark::DoNotOptimize(apply_direct(h, f));
}
BENCHMARK(BM_apply_direct);

void BM_power_iteration(benchmark::State& state) {
    const auto h = hardy_op(small_t(), small_s());
    for (auto _ : state) benchmark::DoNotOptimize(estimate_norm(h, 20, 1));
}
BENCHMARK(BM_power_iteration);

void BM_funcalc_square(benchmark::State& state) {
    const auto h = hardy_op(small_t(), small_s());
    const auto curve = spectrum_curve(*h.symbol());
    const auto gamma = auto_contour(curve, 0.25);
    for (auto _ : state)
        benchmark::DoNotOptimize(apply_function(HolomorphicFunction::square(), gamma, h));
}
BENCHMARK(BM_funcalc_square);

}  // namespace

BENCHMARK_MAIN();
