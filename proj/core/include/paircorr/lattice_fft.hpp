#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace paircorr::quad {

enum class FftDirection { forward, inverse };

// Result of a unitary lattice transform together with its axis metadata.
struct LatticeSpectrum {
  std::vector<std::complex<double>> values;
  double spacing = 0.0;       // dual-axis spacing, 2 pi / (N delta)
  std::size_t length = 0;
};

// Unitary DFT  X_k = N^{-1/2} sum_j x_j exp(-+ 2 pi i j k / N)  of a
// power-of-two length lattice with spacing delta. Throws ConfigurationError
// on a bad length or spacing.
LatticeSpectrum lattice_fft(std::span<const std::complex<double>> samples, double delta,
                            FftDirection dir = FftDirection::forward);

// Row-major 2D variant (rows x cols), both powers of two, same convention.
LatticeSpectrum lattice_fft_2d(std::span<const std::complex<double>> samples,
                               std::size_t rows, std::size_t cols, double delta,
                               FftDirection dir = FftDirection::forward);

bool is_power_of_two(std::size_t n) noexcept;
std::size_t next_power_of_two(std::size_t n) noexcept;

} // namespace paircorr::quad
