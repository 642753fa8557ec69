#include "paircorr/sauter.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace paircorr {

FieldConfig::FieldConfig(double v0, double width, int dimensionality)
    : v0_(v0), width_(width), dim_(dimensionality) {
  if (!(v0 >= 0.0) || !std::isfinite(v0))
    throw ConfigurationError("V0 must be finite and non-negative");
  if (!(width > 0.0))
    throw ConfigurationError("field width W must be positive or infinite");
  if (dimensionality < 1 || dimensionality > 3)
    throw ConfigurationError("dimensionality must be 1, 2 or 3, got " +
                             std::to_string(dimensionality));
}

namespace sauter {

namespace {

void require_finite_width(const FieldConfig &f, const char *what) {
  if (f.is_infinite_width())
    throw UnsupportedOperation(std::string(what) +
                               ": infinite width goes through the linear-limit path");
}

// s / sinh(s), even and analytic.
double s_over_sinh(double s) {
  const double a = std::abs(s);
  if (a < 1e-4) return 1.0 - a * a / 6.0;
  if (a > 700.0) return 0.0;
  return a / std::sinh(a);
}

} // namespace

double potential_value(double x, const FieldConfig &f) {
  require_finite_width(f, "potential_value");
  return 0.5 * f.v0() * (1.0 + std::tanh(x / f.width()));
}

std::complex<double> potential_ft(double q, const FieldConfig &f) {
  require_finite_width(f, "potential_ft");
  if (q == 0.0)
    throw DomainError("potential_ft: q = 0 carries the delta-function term");
  const double s = 0.5 * std::numbers::pi * q * f.width();
  if (std::abs(s) > 700.0) return {0.0, 0.0};
  return {0.0, -0.5 * f.v0() * std::numbers::pi * f.width() / std::sinh(s)};
}

std::complex<double> q_times_potential_ft(double q, const FieldConfig &f) {
  require_finite_width(f, "q_times_potential_ft");
  const double s = 0.5 * std::numbers::pi * q * f.width();
  return {0.0, -f.v0() * s_over_sinh(s)};
}

double linear_limit_slope(const FieldConfig &f) noexcept {
  return 0.5 * f.v0() / f.width();
}

} // namespace sauter
} // namespace paircorr
