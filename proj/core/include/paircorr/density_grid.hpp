#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paircorr/sauter.hpp"

namespace paircorr {

struct Axis {
  std::string name;
  std::string unit;
  std::vector<double> points;
};

enum class ScalingKind { raw, matched_at_origin, matched_at_reference };

struct Scaling {
  ScalingKind kind = ScalingKind::raw;
  double reference = 0.0;  // abscissa the curve is matched at
  double factor = 1.0;     // scaled = raw * factor

  static Scaling raw() { return {}; }
  static Scaling origin() { return {ScalingKind::matched_at_origin, 0.0, 1.0}; }
  static Scaling at(double xi0) { return {ScalingKind::matched_at_reference, xi0, 1.0}; }
};

struct GridMetadata {
  std::optional<FieldConfig> field;
  std::optional<double> cutoff;        // lattice or integration cutoff
  std::optional<double> spacing;       // lattice spacing
  double quadrature_error = 0.0;       // largest absolute error estimate
  std::string description;
};

// Sampled non-negative distribution. Values are row-major over the axes.
class DensityGrid {
public:
  DensityGrid(std::vector<Axis> axes, std::vector<double> values, GridMetadata meta = {});

  const std::vector<Axis> &axes() const noexcept { return axes_; }
  const Axis &axis(std::size_t i = 0) const { return axes_.at(i); }
  const std::vector<double> &values() const noexcept { return values_; }
  const GridMetadata &metadata() const noexcept { return meta_; }
  GridMetadata &metadata() noexcept { return meta_; }
  const Scaling &scaling() const noexcept { return scaling_; }

  // Fixes the scaling factor so that the scaled curve equals 1 at the
  // origin or at scaling.reference (1D grids; cubic interpolation between
  // samples). Throws DomainError if the point lies outside the axis or the
  // value there is zero.
  void apply_scaling(Scaling s);

  std::vector<double> scaled_values() const;

  // Cubic (4-point Lagrange) interpolation of the raw values on a 1D grid.
  double interpolate(double x) const;

private:
  std::vector<Axis> axes_;
  std::vector<double> values_;
  GridMetadata meta_;
  Scaling scaling_;
};

enum class WidthKind { fwhm, fraction };

struct WidthMetric {
  WidthKind kind = WidthKind::fwhm;
  double fraction = 0.5;

  static WidthMetric half_maximum() { return {}; }
  static WidthMetric at_fraction(double f) { return {WidthKind::fraction, f}; }
};

// Half-width: distance from the origin at which the curve first falls to
// fraction * (value at the reference point) on the positive side.
struct WidthReport {
  WidthMetric metric;
  double reference = 0.0;
  double value = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

// The reference point is the grid's scaling reference (0 unless matched at
// a reference). Bracket by scanning samples outward, then bisect on the
// cubic interpolant. Throws WidthNotBracketed when no sample drops below the
// level.
WidthReport extract_width(const DensityGrid &grid, WidthMetric metric = {});

} // namespace paircorr
