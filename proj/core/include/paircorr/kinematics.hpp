#pragma once

#include <cmath>

#include "paircorr/error.hpp"

namespace paircorr {

// Relative pair momentum in units of m c. Components beyond the
// dimensionality are exactly zero.
class ScaledMomentum {
public:
  constexpr ScaledMomentum() = default;

  static ScaledMomentum d1(double px) { return {1, px, 0.0, 0.0}; }
  static ScaledMomentum d2(double px, double py) { return {2, px, py, 0.0}; }
  static ScaledMomentum d3(double px, double py, double pz) {
    return {3, px, py, pz};
  }

  int dim() const noexcept { return dim_; }
  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  double z() const noexcept { return z_; }
  double norm2() const noexcept { return x_ * x_ + y_ * y_ + z_ * z_; }

  ScaledMomentum operator-() const noexcept {
    ScaledMomentum m = *this;
    m.x_ = -x_;
    m.y_ = -y_;
    m.z_ = -z_;
    return m;
  }

  friend bool operator==(const ScaledMomentum &, const ScaledMomentum &) = default;

private:
  ScaledMomentum(int dim, double x, double y, double z)
      : dim_(dim), x_(x), y_(y), z_(z) {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
      throw ContractViolation("ScaledMomentum components must be finite");
  }

  int dim_ = 1;
  double x_ = 0.0;
  double y_ = 0.0;
  double z_ = 0.0;
};

// Free-particle energy in units of m c^2: sqrt(1 + |P|^2).
inline double energy(const ScaledMomentum &p) noexcept {
  return std::sqrt(1.0 + p.norm2());
}

} // namespace paircorr
