#include <benchmark/benchmark.h>

#include "polyknot/crofton.hpp"
#include "polyknot/curvature.hpp"
#include "polyknot/diagram.hpp"
#include "polyknot/generate.hpp"
#include "polyknot/hull2.hpp"
#include "polyknot/quadrisecant.hpp"

using namespace polyknot;

namespace {

PolygonalKnot trefoil(int samples) { return generate_torus_knot({2, 3, samples, 2.0, 1.0}); }

void BM_TotalCurvature(benchmark::State& state) {
  const auto knot = trefoil(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_curvature(knot).total);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TotalCurvature)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_CroftonPlane(benchmark::State& state) {
  const auto knot = trefoil(60);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        crofton_estimate(knot, CroftonMode::plane_projection, static_cast<int>(state.range(0)), 1)
            .mean);
  }
}
BENCHMARK(BM_CroftonPlane)->Arg(1000)->Arg(10000);

void BM_BuildDiagram(benchmark::State& state) {
  const auto knot = trefoil(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_diagram(knot, Direction({0.01, 0.02, 1.0}), 0).face_count());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildDiagram)->RangeMultiplier(2)->Range(30, 240)->Complexity();

void BM_QuadrisecantScan(benchmark::State& state) {
  const auto knot = trefoil(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_quadrisecants(knot).records.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_QuadrisecantScan)->Arg(30)->Arg(60)->Complexity();

void BM_PlaneCrossing(benchmark::State& state) {
  const auto knot = trefoil(60);
  const Plane plane = Plane::through(knot.bbox().center(), Direction({0.3, 0.2, 1.0}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(plane_crossing_number(knot, plane).count);
  }
}
BENCHMARK(BM_PlaneCrossing);

}  // namespace

BENCHMARK_MAIN();
