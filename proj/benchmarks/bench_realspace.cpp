#include <benchmark/benchmark.h>

#include "paircorr/realspace.hpp"

using namespace paircorr;
using namespace paircorr::realspace;

// Direct synthesis of one xi point from a 1D lattice of 2 * 4 * cutoff / spacing sites.
static void BM_LineTransform(benchmark::State &state) {
  const MomentumLattice lat{20.0, 0.01};
  const auto samples = momentum_samples_quasi2d(0.0, lat);
  double xi = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(line_transform(samples, lat.spacing, xi));
    xi += 1e-7;
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(samples.size()));
}
BENCHMARK(BM_LineTransform)->Unit(benchmark::kMicrosecond);

static void BM_Synthesize1D(benchmark::State &state) {
  const MomentumLattice lat{20.0, 0.01};
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_1d(lat, 0.0, 5.0));
}
BENCHMARK(BM_Synthesize1D)->Unit(benchmark::kMillisecond);

static void BM_Synthesize2D(benchmark::State &state) {
  const MomentumLattice lat{static_cast<double>(state.range(0)), 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_2d(lat, 5.0));
}
BENCHMARK(BM_Synthesize2D)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

// One marginal value; the transverse one walks the cached lattice column-wise.
static void BM_MarginalX(benchmark::State &state) {
  const Marginals2D m(MomentumLattice{static_cast<double>(state.range(0)), 0.1});
  double xi = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.rho_x(xi));
    xi += 1e-7;
  }
}
BENCHMARK(BM_MarginalX)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_MarginalY(benchmark::State &state) {
  const Marginals2D m(MomentumLattice{static_cast<double>(state.range(0)), 0.1});
  double xi = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.rho_y(xi));
    xi += 1e-7;
  }
}
BENCHMARK(BM_MarginalY)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
