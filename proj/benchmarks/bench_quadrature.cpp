#include <cmath>
#include <complex>
#include <vector>

#include <benchmark/benchmark.h>

#include "paircorr/lattice_fft.hpp"
#include "paircorr/quadrature.hpp"
#include "paircorr/spectra.hpp"

using namespace paircorr;

static void BM_LatticeFft(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::complex<double>> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = std::exp(-1e-4 * double(i) * double(i));
  for (auto _ : state) benchmark::DoNotOptimize(quad::lattice_fft(x, 0.01));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LatticeFft)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

static void BM_LatticeFft2D(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::complex<double>> x(n * n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(quad::lattice_fft_2d(x, n, n, 0.1));
}
BENCHMARK(BM_LatticeFft2D)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_AdaptiveMarginalOracle(benchmark::State &state) {
  quad::QuadratureSpec spec;
  spec.rel_tol = 1e-10;
  spec.abs_tol = 1e-13;
  spec.tail_model = quad::TailModel::power_law;
  for (auto _ : state) {
    auto row = [](double py) { return spectra::joint_spectrum_2d(ScaledMomentum::d2(1.0, py)); };
    benchmark::DoNotOptimize(quad::integrate_with_tail(row, 0.0, 1e5, spec));
  }
}
BENCHMARK(BM_AdaptiveMarginalOracle)->Unit(benchmark::kMicrosecond);

static void BM_OscillatoryFt(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(quad::oscillatory_ft([](double x) { return 1.0 / (1.0 + x * x); }, 2.0));
}
BENCHMARK(BM_OscillatoryFt)->Unit(benchmark::kMicrosecond);
