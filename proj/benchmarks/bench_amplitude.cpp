#include <benchmark/benchmark.h>

#include "paircorr/amplitude.hpp"
#include "paircorr/spectra.hpp"

using namespace paircorr;

static void BM_MatrixElement(benchmark::State &state) {
  const FieldConfig f(2.0, 1.0);
  double p = 0.3;
  for (auto _ : state) {
    auto m = amplitude::matrix_element(ScaledMomentum::d1(p), ScaledMomentum::d1(-0.7), f);
    benchmark::DoNotOptimize(m.value);
    p += 1e-9;
  }
}
BENCHMARK(BM_MatrixElement);

static void BM_ReducedWavefunction2D(benchmark::State &state) {
  double px = 0.4;
  for (auto _ : state) {
    auto a = amplitude::reduced_momentum_wavefunction(ScaledMomentum::d2(px, 1.1));
    benchmark::DoNotOptimize(a.components);
    px += 1e-9;
  }
}
BENCHMARK(BM_ReducedWavefunction2D);

static void BM_ConditionalAmplitude(benchmark::State &state) {
  const FieldConfig f(2.0, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(amplitude::conditional_amplitude_1d(0.8, f));
}
BENCHMARK(BM_ConditionalAmplitude)->Arg(1)->Arg(3)->Arg(10);

static void BM_FiniteWidthSpectrum(benchmark::State &state) {
  const FieldConfig f(2.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(spectra::finite_width_spectrum_1d(0.5, f));
}
BENCHMARK(BM_FiniteWidthSpectrum);

static void BM_PairProbability(benchmark::State &state) {
  const FieldConfig f(2.0, 1.0);
  const double cut = amplitude::adapted_cutoff(f);
  for (auto _ : state) benchmark::DoNotOptimize(amplitude::pair_probability(f, 1.0, cut));
}
BENCHMARK(BM_PairProbability)->Unit(benchmark::kMillisecond);
