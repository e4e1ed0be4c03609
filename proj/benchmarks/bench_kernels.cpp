#include <benchmark/benchmark.h>

#include <complex>

#include "smx/oracle.hpp"
#include "smx/scattering.hpp"
#include "smx/specfun.hpp"
#include "smx/spectrum.hpp"

namespace {

using smx::scattering::cx;
using smx::scattering::ModelParams;

void BM_BesselJComplexOrder(benchmark::State& state) {
  const cx nu(0.7, -1.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smx::specfun::bessel_j_cx_order(nu, 5.0));
  }
}
BENCHMARK(BM_BesselJComplexOrder);

void BM_GammaComplex(benchmark::State& state) {
  const cx z(2.5, 4.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smx::specfun::gamma_cx(z));
  }
}
BENCHMARK(BM_GammaComplex);

void BM_SMatrixRealK(benchmark::State& state) {
  const ModelParams p{1.0, 5.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(smx::scattering::s_matrix(p, cx(1.3, 0.0)));
  }
}
BENCHMARK(BM_SMatrixRealK);

void BM_RegularSolution(benchmark::State& state) {
  const ModelParams p{1.0, 3.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        smx::scattering::regular_solution(p, cx(1.0, 0.0), 2.0));
  }
}
BENCHMARK(BM_RegularSolution);

void BM_FindBoundStates(benchmark::State& state) {
  const ModelParams p{1.0, 5.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(smx::spectrum::find_bound_states(p));
  }
}
BENCHMARK(BM_FindBoundStates);

void BM_ContourResidue(benchmark::State& state) {
  const ModelParams p{1.0, 1.0};
  smx::oracle::ContourSpec spec;
  spec.center = cx(0.0, 0.5);
  spec.radius = smx::oracle::default_contour_radius(p, spec.center);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smx::oracle::contour_residue(p, spec));
  }
}
BENCHMARK(BM_ContourResidue);

void BM_NumerovIntegrate(benchmark::State& state) {
  const ModelParams p{1.0, 3.0};
  const auto grid = smx::oracle::NumerovGrid::defaults(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        smx::oracle::numerov_integrate(p, 1.0, grid));
  }
}
BENCHMARK(BM_NumerovIntegrate);

}  // namespace

BENCHMARK_MAIN();
