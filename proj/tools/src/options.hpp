#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paircorr/density_grid.hpp"
#include "paircorr/realspace.hpp"
#include "paircorr/units.hpp"

namespace paircorr::cli {

// Bad flag value or flag combination; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Dim { one, quasi2d, two, three };

struct GridSpec {
  double extent = 0.0;
  double step = 0.0;
};

struct ScaleSpec {
  ScalingKind kind = ScalingKind::matched_at_origin;
  double reference = 0.0;
};

// Flags shared by `spectrum` and `density`, as typed by the user.
struct CommonOptions {
  std::string dim = "1";
  std::string width = "inf";
  double v0 = 2.0;
  std::optional<double> py;
  std::optional<std::string> axis;
  std::optional<double> cutoff;
  std::optional<std::string> grid;
  std::optional<std::string> xi;
  std::optional<std::string> scale;
  std::string cutoff_shape = "gaussian";
  std::string units = "scaled";
  std::string out;
};

Dim parse_dim(const std::string &s);
int field_dimensionality(Dim d) noexcept;
std::string dim_name(Dim d);
// Positive float or "inf".
double parse_width(const std::string &s);
// "<extent>:<step>" with 0 < step <= extent.
GridSpec parse_grid(const std::string &s);
// "origin", "raw" or "ref:<xi0>".
ScaleSpec parse_scale(const std::string &s);
realspace::CutoffShape parse_cutoff_shape(const std::string &s);
UnitMode parse_units(const std::string &s);

// 0, step, 2 step, ... up to extent (inclusive within rounding).
std::vector<double> half_axis(const GridSpec &g);
// -extent .. extent through 0.
std::vector<double> full_axis(const GridSpec &g);

std::string scaling_name(ScalingKind k);

} // namespace paircorr::cli
