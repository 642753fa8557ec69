#include "paircorr/spectra.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "paircorr/amplitude.hpp"
#include "paircorr/parallel.hpp"

namespace paircorr::spectra {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Range of s = pi q W / 2 kept in the transfer integrals; |q FT|^2 decays
// like s^2 exp(-2 s).
constexpr double kTransferSpan = 25.0;

void require_cutoff(double cutoff) {
  if (!(cutoff > 0.0) || !std::isfinite(cutoff))
    throw ContractViolation("3D marginals need a finite positive cutoff");
}

void require_finite_width(const FieldConfig &f) {
  if (f.is_infinite_width())
    throw UnsupportedOperation("finite-width spectra need finite W; use the closed forms");
}

FiniteWidthValue transfer_integral(double px, double py, bool planar, const FieldConfig &f,
                                   const quad::QuadratureSpec &spec) {
  require_finite_width(f);
  if (f.v0() == 0.0) return {};
  const double jac = 2.0 / (std::numbers::pi * f.width());
  auto integrand = [&](double s) {
    const double q = jac * s;
    const auto p = planar ? ScaledMomentum::d2(px + 0.5 * q, py) : ScaledMomentum::d1(px + 0.5 * q);
    const auto n = planar ? ScaledMomentum::d2(-px + 0.5 * q, -py) : ScaledMomentum::d1(-px + 0.5 * q);
    return std::norm(amplitude::matrix_element(p, n, f).value) * jac;
  };
  quad::QuadratureSpec s = spec;
  s.abs_tol = std::numeric_limits<double>::min();
  auto r = quad::integrate_adaptive(integrand, -kTransferSpan, kTransferSpan, s);
  r.require("finite-width spectrum");
  return {r.value, r.error_estimate};
}

} // namespace

double joint_spectrum_2d(const ScaledMomentum &P) noexcept {
  const double py2 = P.y() * P.y();
  const double d = 1.0 + P.x() * P.x() + py2;
  return 4.0 * (1.0 + py2) / (d * d);
}

double spectrum_1d(double px) noexcept {
  const double d = 1.0 + px * px;
  return 4.0 / (d * d);
}

double marginal_longitudinal_2d(double px) noexcept {
  const double a = 1.0 + px * px;
  const double r = 1.0 / std::sqrt(a);
  return kTwoPi * (r + r * r * r);
}

double marginal_transverse_2d(double py) noexcept {
  return kTwoPi / std::sqrt(1.0 + py * py);
}

double joint_spectrum_3d(const ScaledMomentum &P) noexcept {
  const double t = P.y() * P.y() + P.z() * P.z();
  const double d = 1.0 + P.x() * P.x() + t;
  return 8.0 * (1.0 + t) / (d * d);
}

double regulated_marginal_3d(double px, double cutoff) {
  require_cutoff(cutoff);
  const double a = 1.0 + px * px;
  const double l2 = cutoff * cutoff;
  return 8.0 * std::numbers::pi *
         (std::log1p(l2 / a) + (1.0 - a) * (1.0 / a - 1.0 / (a + l2)));
}

double regulated_marginal_3d_transverse(double py, double cutoff) {
  require_cutoff(cutoff);
  const double b = 1.0 + py * py;
  const double l2 = cutoff * cutoff;
  return 4.0 * std::numbers::pi * (std::log1p(l2 / b) + l2 / (b + l2));
}

double quasi2d_spectrum(double px, double py, bool scaled_to_origin) noexcept {
  const double v = joint_spectrum_2d(ScaledMomentum::d2(px, py));
  if (!scaled_to_origin) return v;
  return v / joint_spectrum_2d(ScaledMomentum::d2(0.0, py));
}

FiniteWidthValue finite_width_spectrum_1d(double px, const FieldConfig &f,
                                          const quad::QuadratureSpec &spec) {
  return transfer_integral(px, 0.0, false, f, spec);
}

FiniteWidthValue finite_width_spectrum_2d(double px, double py, const FieldConfig &f,
                                          const quad::QuadratureSpec &spec) {
  return transfer_integral(px, py, true, f, spec);
}

FiniteWidthValue finite_width_marginal_2d(MarginalAxis axis, double value,
                                          const FieldConfig &f,
                                          const quad::QuadratureSpec &spec) {
  require_finite_width(f);
  double inner_error = 0.0;
  auto integrand = [&](double other) {
    const auto r = axis == MarginalAxis::longitudinal
                       ? finite_width_spectrum_2d(value, other, f, spec)
                       : finite_width_spectrum_2d(other, value, f, spec);
    inner_error = std::max(inner_error, r.error_estimate);
    return r.value;
  };
  quad::QuadratureSpec outer = spec;
  outer.rel_tol = std::max(spec.rel_tol, 1e-9);
  outer.abs_tol = std::numeric_limits<double>::min();
  auto r = quad::integrate_adaptive(integrand, -std::numeric_limits<double>::infinity(),
                                    std::numeric_limits<double>::infinity(), outer);
  r.require("finite-width 2D marginal");
  return {r.value, r.error_estimate + inner_error};
}

DensityGrid sample(const std::function<double(double)> &fn, std::span<const double> points,
                   Axis axis, GridMetadata meta) {
  std::vector<double> values(points.size());
  parallel_for(points.size(), [&](std::size_t i) { values[i] = fn(points[i]); });
  axis.points.assign(points.begin(), points.end());
  return DensityGrid({std::move(axis)}, std::move(values), std::move(meta));
}

WidthReport half_width(const std::function<double(double)> &fn, WidthMetric metric,
                       double reference, double initial) {
  if (!(metric.fraction > 0.0 && metric.fraction < 1.0))
    throw ContractViolation("half_width: fraction must lie in (0, 1)");
  const double level = metric.fraction * fn(reference);
  auto excess = [&](double x) { return fn(x) - level; };
  double lo = reference;
  double hi = reference + initial;
  for (int i = 0; excess(hi) > 0.0; ++i) {
    if (i > 80) throw WidthNotBracketed("half_width: no crossing found", reference, hi);
    lo = hi;
    hi = reference + 2.0 * (hi - reference);
  }
  const auto b = quad::bisect(excess, lo, hi, 1e-15);
  return {metric, reference, b.root(), b.lo, b.hi};
}

} // namespace paircorr::spectra
