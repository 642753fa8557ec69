#pragma once

#include <complex>
#include <limits>

#include "paircorr/error.hpp"

namespace paircorr {

// Sauter step V(x) = V0 [1 + tanh(x/W)] / 2. V0 is in units of m c^2 and W in
// Compton wavelengths; W may be +infinity, which selects the linear-ramp limit.
class FieldConfig {
public:
  FieldConfig(double v0, double width, int dimensionality = 1);

  static FieldConfig infinite_width(double v0, int dimensionality = 1) {
    return {v0, std::numeric_limits<double>::infinity(), dimensionality};
  }

  double v0() const noexcept { return v0_; }
  double width() const noexcept { return width_; }
  int dimensionality() const noexcept { return dim_; }
  bool is_infinite_width() const noexcept { return width_ == std::numeric_limits<double>::infinity(); }

  FieldConfig with_v0(double v0) const { return {v0, width_, dim_}; }
  FieldConfig with_width(double w) const { return {v0_, w, dim_}; }

private:
  double v0_;
  double width_;
  int dim_;
};

namespace sauter {

// V(x) for finite W. Throws UnsupportedOperation when W is infinite.
double potential_value(double x, const FieldConfig &f);

// Fourier transform  int dx e^{-iqx} V(x)  without the delta(q) term from the
// constant part of V:  -i (V0/2) pi W / sinh(pi q W / 2).
// Purely imaginary, odd in q. Throws DomainError at q == 0.
std::complex<double> potential_ft(double q, const FieldConfig &f);

// q * potential_ft(q), analytic through q = 0 where it equals -i V0.
std::complex<double> q_times_potential_ft(double q, const FieldConfig &f);

// V0 / (2W): slope of the linear ramp V0 (1 + x/W)/2 that the step
// approaches for wide fields.
double linear_limit_slope(const FieldConfig &f) noexcept;

} // namespace sauter
} // namespace paircorr
