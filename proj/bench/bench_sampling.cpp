// Serial reference kernels vs. OpenMP kernels for grid sampling and cell
// classification. Run with OMP_NUM_THREADS to vary the thread count.

#include <benchmark/benchmark.h>

#include "gbx/sampling.hpp"
#include "gbx/textio.hpp"

using namespace gbx;
using namespace gbx::geom;

namespace {

const CompiledPolynomial& field() {
  static const CompiledPolynomial f(parse_polynomial("x+yz+y-z^4-4"));
  return f;
}

template <ScalarGrid (*Sample)(const CompiledPolynomial&, const Region&)>
void BM_Sample(benchmark::State& state) {
  Region region = Region::cube(-5, 5, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Sample(field(), region));
  state.SetItemsProcessed(state.iterations() * (state.range(0) + 1) * (state.range(0) + 1) * (state.range(0) + 1));
}

template <std::vector<std::uint8_t> (*Classify)(const ScalarGrid&)>
void BM_Classify(benchmark::State& state) {
  ScalarGrid grid = sample_grid_serial(field(), Region::cube(-5, 5, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(Classify(grid));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) * state.range(0));
}

void BM_MeshSurface(benchmark::State& state) {
  Polynomial p = parse_polynomial("x^2+y^2+z^2-16");
  Region region = Region::cube(-5, 5, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mesh_implicit_surface(p, region));
}

}  // namespace

BENCHMARK(BM_Sample<sample_grid_serial>)->Name("sample/serial")->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sample<sample_grid_parallel>)->Name("sample/openmp")->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Classify<classify_cells_serial>)->Name("classify/serial")->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Classify<classify_cells_parallel>)->Name("classify/openmp")->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeshSurface)->Name("mesh_implicit_surface")->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
