#include "paircorr/lattice_fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "paircorr/error.hpp"

namespace paircorr::quad {

namespace {

// The FFTW planner is not re-entrant.
std::mutex &planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void *p) const noexcept { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

FftwBuffer allocate(std::size_t n) {
  auto *p = static_cast<fftw_complex *>(fftw_malloc(sizeof(fftw_complex) * n));
  if (!p) throw std::bad_alloc();
  return FftwBuffer(p);
}

void check(std::size_t n, double delta, const char *axis) {
  if (!is_power_of_two(n))
    throw ConfigurationError(std::string("lattice_fft: ") + axis +
                             " length must be a power of two, got " + std::to_string(n));
  if (!(delta > 0.0)) throw ConfigurationError("lattice_fft: spacing must be positive");
}

LatticeSpectrum run(std::span<const std::complex<double>> samples, int rank, const int *dims,
                    double delta, FftDirection dir) {
  const std::size_t n = samples.size();
  auto in = allocate(n);
  auto out = allocate(n);
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft(rank, dims, in.get(), out.get(),
                         dir == FftDirection::forward ? FFTW_FORWARD : FFTW_BACKWARD,
                         FFTW_ESTIMATE);
  }
  std::memcpy(in.get(), samples.data(), sizeof(fftw_complex) * n);
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  LatticeSpectrum result;
  result.length = n;
  result.values.resize(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    result.values[i] = {out[i][0] * scale, out[i][1] * scale};
  const double extent = static_cast<double>(dims[rank - 1]) * delta;
  result.spacing = 2.0 * std::numbers::pi / extent;
  return result;
}

} // namespace

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) noexcept {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

LatticeSpectrum lattice_fft(std::span<const std::complex<double>> samples, double delta,
                            FftDirection dir) {
  check(samples.size(), delta, "lattice");
  const int dims[1] = {static_cast<int>(samples.size())};
  return run(samples, 1, dims, delta, dir);
}

LatticeSpectrum lattice_fft_2d(std::span<const std::complex<double>> samples,
                               std::size_t rows, std::size_t cols, double delta,
                               FftDirection dir) {
  check(rows, delta, "row");
  check(cols, delta, "column");
  if (samples.size() != rows * cols)
    throw ConfigurationError("lattice_fft_2d: sample count does not match rows*cols");
  const int dims[2] = {static_cast<int>(rows), static_cast<int>(cols)};
  return run(samples, 2, dims, delta, dir);
}

} // namespace paircorr::quad
