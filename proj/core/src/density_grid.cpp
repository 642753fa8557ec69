#include "paircorr/density_grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "paircorr/quadrature.hpp"

namespace paircorr {

DensityGrid::DensityGrid(std::vector<Axis> axes, std::vector<double> values, GridMetadata meta)
    : axes_(std::move(axes)), values_(std::move(values)), meta_(std::move(meta)) {
  if (axes_.empty()) throw ConfigurationError("DensityGrid needs at least one axis");
  std::size_t expected = 1;
  for (const auto &ax : axes_) {
    if (ax.points.empty()) throw ConfigurationError("DensityGrid axis '" + ax.name + "' is empty");
    for (std::size_t i = 1; i < ax.points.size(); ++i)
      if (!(ax.points[i] > ax.points[i - 1]))
        throw ConfigurationError("DensityGrid axis '" + ax.name + "' not strictly increasing");
    expected *= ax.points.size();
  }
  if (values_.size() != expected)
    throw ConfigurationError("DensityGrid value count does not match axes");
  for (double v : values_)
    if (!(v >= 0.0)) throw ContractViolation("DensityGrid values must be non-negative and finite");
}

double DensityGrid::interpolate(double x) const {
  if (axes_.size() != 1) throw UnsupportedOperation("interpolate: 1D grids only");
  const auto &xs = axes_[0].points;
  if (x < xs.front() || x > xs.back())
    throw DomainError("interpolate: point outside the sampled axis");
  const std::size_t n = xs.size();
  if (n == 1) return values_[0];
  auto hi = std::upper_bound(xs.begin(), xs.end(), x);
  std::size_t i = static_cast<std::size_t>(std::distance(xs.begin(), hi));
  i = std::clamp<std::size_t>(i, 1, n - 1);
  if (xs[i - 1] == x) return values_[i - 1];
  if (n < 4) {
    const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return values_[i - 1] * (1.0 - t) + values_[i] * t;
  }
  std::size_t first = i >= 2 ? i - 2 : 0;
  first = std::min(first, n - 4);
  double sum = 0.0;
  for (std::size_t j = first; j < first + 4; ++j) {
    double w = 1.0;
    for (std::size_t k = first; k < first + 4; ++k)
      if (k != j) w *= (x - xs[k]) / (xs[j] - xs[k]);
    sum += w * values_[j];
  }
  return sum;
}

void DensityGrid::apply_scaling(Scaling s) {
  if (s.kind == ScalingKind::raw) {
    scaling_ = Scaling::raw();
    return;
  }
  const double at = s.kind == ScalingKind::matched_at_origin ? 0.0 : s.reference;
  const double v = interpolate(at);
  if (!(v > 0.0)) throw DomainError("apply_scaling: density vanishes at the matching point");
  s.factor = 1.0 / v;
  if (s.kind == ScalingKind::matched_at_origin) s.reference = 0.0;
  scaling_ = s;
}

std::vector<double> DensityGrid::scaled_values() const {
  std::vector<double> out(values_);
  for (double &v : out) v *= scaling_.factor;
  return out;
}

WidthReport extract_width(const DensityGrid &grid, WidthMetric metric) {
  if (grid.axes().size() != 1) throw UnsupportedOperation("extract_width: 1D grids only");
  if (!(metric.fraction > 0.0 && metric.fraction < 1.0))
    throw ContractViolation("extract_width: fraction must lie in (0, 1)");
  const auto &xs = grid.axis().points;
  const auto &ys = grid.values();
  const double ref = grid.scaling().kind == ScalingKind::matched_at_reference
                         ? grid.scaling().reference
                         : 0.0;
  const double level = metric.fraction * grid.interpolate(ref);
  auto start = std::lower_bound(xs.begin(), xs.end(), ref);
  std::size_t i = static_cast<std::size_t>(std::distance(xs.begin(), start));
  for (; i < xs.size(); ++i) {
    if (ys[i] < level) break;
  }
  if (i == xs.size() || i == 0)
    throw WidthNotBracketed("extract_width: curve never falls to " +
                                std::to_string(metric.fraction) + " of its reference value",
                            xs.front(), xs.back());
  const double lo = std::max(xs[i - 1], ref);
  const double hi = xs[i];
  auto excess = [&](double x) { return grid.interpolate(x) - level; };
  auto b = quad::bisect(excess, lo, hi, 1e-15);
  return {metric, ref, b.root(), lo, hi};
}

} // namespace paircorr
