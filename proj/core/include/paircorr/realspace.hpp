#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "paircorr/cvec4.hpp"
#include "paircorr/density_grid.hpp"
#include "paircorr/sauter.hpp"

namespace paircorr::realspace {

// Reference abscissa used to match 2D marginals, whose origin diverges.
inline constexpr double kReferenceXi = 5e-5;

// How the lattice cutoff is imposed. box: samples with any |P_i| > cutoff
// are dropped. gaussian: samples are weighted by exp(-|P|^2 / cutoff^2) and
// the lattice extends to 4 * cutoff; the smooth edge avoids the Gibbs
// ringing that a hard edge produces on the slowly decaying 2D amplitude.
enum class CutoffShape { box, gaussian };

// Uniform momentum lattice P_k = k * spacing, |P_k| <= extent() per axis.
// For FFT use it is embedded in a power-of-two array of length fft_size()
// indexed by k + fft_size()/2, with the remaining entries zeroed.
struct MomentumLattice {
  double cutoff = 20.0;
  double spacing = 0.01;
  CutoffShape shape = CutoffShape::gaussian;

  void validate() const;
  double extent() const { return shape == CutoffShape::box ? cutoff : 4.0 * cutoff; }
  // Regulator weight at |P|^2 = p2.
  double weight(double p2) const;
  // Largest k with k * spacing <= extent().
  std::size_t half_count() const;
  std::size_t count() const { return 2 * half_count() + 1; }
  double point(std::ptrdiff_t k) const { return static_cast<double>(k) * spacing; }
  std::size_t fft_size() const;
  double xi_spacing() const;
  // Reported xi must satisfy |xi| < pi / spacing (half the alias period).
  double alias_limit() const;
  void require_inside_alias(double xi_max) const;
};

// Relative pair coordinate in Compton wavelengths.
struct RelativeCoordinate {
  double xi_x = 0.0;
  double xi_y = 0.0;
};

// phi(xi) = (2 pi)^{-1/2} spacing sum_k samples[k] exp(i P_k xi), with
// samples indexed k = -K..K. This is the direct (non-FFT) synthesis used for
// curves at arbitrary abscissae.
CVec4 line_transform(std::span<const CVec4> samples, double spacing, double xi);

// Full 2D configuration-space synthesis of the infinite-width wavefunction
// by FFT. Fields are row-major [iy][ix] on xi_j = (j - n/2) * xi_spacing.
struct Synthesis2D {
  std::size_t n = 0;
  double p_spacing = 0.0;
  double xi_spacing = 0.0;
  std::vector<CVec4> momentum;  // same layout, P_k = (k - n/2) * p_spacing
  std::vector<CVec4> field;

  double xi(std::size_t j) const {
    return (static_cast<double>(j) - static_cast<double>(n) / 2.0) * xi_spacing;
  }
  double density(std::size_t ix, std::size_t iy) const { return field[iy * n + ix].norm2(); }
};

// xi_max is the extent of interest; it must sit inside the alias period.
Synthesis2D synthesize_2d(const MomentumLattice &lattice, double xi_max);

// 1D counterpart at fixed Py (Py = 0 is the 1D system).
struct Synthesis1D {
  std::size_t n = 0;
  double p_spacing = 0.0;
  double xi_spacing = 0.0;
  std::vector<CVec4> momentum;
  std::vector<CVec4> field;
  double xi(std::size_t j) const {
    return (static_cast<double>(j) - static_cast<double>(n) / 2.0) * xi_spacing;
  }
};
Synthesis1D synthesize_1d(const MomentumLattice &lattice, double py, double xi_max);

// rho(xi_x) for the 1D system with the positron at x = 0. Infinite W uses the
// closed-form momentum wavefunction at Py = 0; finite W synthesizes the
// conditional amplitude int dn of the Sauter pair integrand. Raw values.
DensityGrid density_1d(const FieldConfig &f, const MomentumLattice &lattice,
                       std::span<const double> xi);

// Momentum-space electron amplitude on the lattice (k = -K..K) used by
// density_1d; exposed for duality checks.
std::vector<CVec4> momentum_samples_1d(const FieldConfig &f, const MomentumLattice &lattice);

// Fixed-Py slice of the (regulated) infinite-width wavefunction, k = -K..K.
std::vector<CVec4> momentum_samples_quasi2d(double py, const MomentumLattice &lattice);

// rho(xi_x; Py) from the fixed-Py slice of the infinite-width wavefunction.
DensityGrid density_quasi2d(double py, const MomentumLattice &lattice,
                            std::span<const double> xi);

// Longitudinal and transverse marginals of the 2D infinite-width density,
//   rho(xi_x) = int dxi_y rho(xi_x, xi_y),  rho(xi_y) = int dxi_x rho,
// evaluated through Parseval along the marginalized axis:
//   rho(xi_x) = spacing * sum_{Py} |(2pi)^{-1/2} spacing sum_{Px} phi e^{i Px xi_x}|^2.
// xi = 0 is refused (SingularPoint): the marginals diverge there as the
// cutoff grows.
class Marginals2D {
public:
  explicit Marginals2D(const MomentumLattice &lattice);

  double rho_x(double xi_x) const;
  double rho_y(double xi_y) const;

  DensityGrid curve_x(std::span<const double> xi) const;
  DensityGrid curve_y(std::span<const double> xi) const;

  const MomentumLattice &lattice() const noexcept { return lattice_; }

private:
  double marginal(double xi, bool along_x) const;
  CVec4 sample(std::size_t ix, std::size_t iy) const;

  MomentumLattice lattice_;
  std::size_t side_ = 0;
  std::vector<CVec4> cache_;  // row-major [iy][ix]; empty when too large
};

} // namespace paircorr::realspace
