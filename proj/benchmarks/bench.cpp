#include "dq/dq.hpp"

#include <benchmark/benchmark.h>

using namespace dq;

namespace {

PhasePoly power_of_h(int n) {
    const PhasePoly h = parse_expr("(p^2 + q^2)/2");
    PhasePoly out = parse_expr("1");
    for (int k = 0; k < n; ++k) out = out * h;
    return out;
}

void star_moyal_poly(benchmark::State& state) {
    const PhasePoly f = power_of_h(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(star_poly(f, f, Scheme::moyal));
}
BENCHMARK(star_moyal_poly)->DenseRange(1, 5);

void star_shift_poly(benchmark::State& state) {
    const PhasePoly f = power_of_h(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(star_shift(f, f));
}
BENCHMARK(star_shift_poly)->DenseRange(1, 5);

void projector_idempotency(benchmark::State& state) {
    const PhysParams params;
    const GaussianPoly pi = projector(static_cast<int>(state.range(0)), Scheme::moyal, params);
    for (auto _ : state) benchmark::DoNotOptimize(gaussian_star(pi, pi, Scheme::moyal));
}
BENCHMARK(projector_idempotency)->Arg(0)->Arg(4)->Arg(8);

void grid_star(benchmark::State& state) {
    const PhysParams params;
    const GridSpec spec = GridSpec::defaults(params, static_cast<int>(state.range(0)));
    const GridFunction g = sample(projector(1, Scheme::moyal, params), spec);
    const PhasePoly h = parse_expr("(p^2 + q^2)/2");
    for (auto _ : state) benchmark::DoNotOptimize(grid_star_poly(h, g));
}
BENCHMARK(grid_star)->Arg(64)->Arg(128)->Arg(256);

void path_integral(benchmark::State& state) {
    const PhysParams params;
    for (auto _ : state) benchmark::DoNotOptimize(slice_compose(1.0, static_cast<int>(state.range(0)), params));
}
BENCHMARK(path_integral)->Arg(64)->Arg(512);

}  // namespace
BENCHMARK_MAIN();
