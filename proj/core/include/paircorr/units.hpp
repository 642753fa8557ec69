#pragma once

#include "paircorr/error.hpp"

namespace paircorr {

// Speed of light in atomic units.
inline constexpr double kSpeedOfLightAU = 137.035999084;

enum class UnitMode { scaled, atomic };

// Conversion between the scaled units used internally (c = 1, momenta in
// units of m c, lengths in Compton wavelengths) and atomic units. Only the
// I/O layer ever converts.
class UnitSystem {
public:
  explicit UnitSystem(double c = kSpeedOfLightAU, UnitMode mode = UnitMode::scaled)
      : c_(c), mode_(mode) {
    if (!(c > 0.0)) throw ConfigurationError("speed of light must be positive");
  }

  double c() const noexcept { return c_; }
  UnitMode mode() const noexcept { return mode_; }

  // scaled momentum P -> atomic momentum p = P c
  double momentum_to_output(double scaled) const noexcept {
    return mode_ == UnitMode::atomic ? scaled * c_ : scaled;
  }
  // scaled length xi (Compton wavelengths) -> atomic length x = xi / c
  double length_to_output(double scaled) const noexcept {
    return mode_ == UnitMode::atomic ? scaled / c_ : scaled;
  }
  const char *momentum_unit() const noexcept {
    return mode_ == UnitMode::atomic ? "a.u." : "mc";
  }
  const char *length_unit() const noexcept {
    return mode_ == UnitMode::atomic ? "a.u." : "lambda_e";
  }

private:
  double c_;
  UnitMode mode_;
};

} // namespace paircorr
