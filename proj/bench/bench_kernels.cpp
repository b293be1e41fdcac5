// Serial reference vs OpenMP path for the data-parallel kernels.
#include <benchmark/benchmark.h>

#include "howechar/orbits.hpp"
#include "howechar/thetachar.hpp"
#include "howechar/weylchar.hpp"

namespace {

using howechar::kernels::Exec;

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_GridSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(howechar::vandermonde_grid_sweep(6, exec_of(state)));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_GridSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_InnerProduct(benchmark::State& state) {
  using namespace howechar;
  const auto rs = build_root_system(Family::A, 3);
  ClassFunction f = [&](const TorusPoint& t) { return weyl_character(rs, Weight{HalfInteger(2), HalfInteger(1), HalfInteger(0)}, t); };
  const QuadratureGrid grid{32, 3};
  for (auto _ : state) benchmark::DoNotOptimize(torus_inner_product(f, f, rs, grid, exec_of(state)));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_InnerProduct)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const std::vector<double> lambda{2, 1, 0}, x{0.9, -0.3, 0.4};
  for (auto _ : state)
    benchmark::DoNotOptimize(howechar::orbit_integral_monte_carlo(lambda, x, 200000, 1, exec_of(state)));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_MonteCarlo)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
