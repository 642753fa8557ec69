#include "options.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace paircorr::cli {

namespace {

double parse_number(const std::string &s, const std::string &what) {
  double v = 0.0;
  const char *end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v))
    throw UsageError("invalid " + what + ": '" + s + "'");
  return v;
}

} // namespace

Dim parse_dim(const std::string &s) {
  if (s == "1") return Dim::one;
  if (s == "quasi2d") return Dim::quasi2d;
  if (s == "2") return Dim::two;
  if (s == "3") return Dim::three;
  throw UsageError("--dim must be one of 1, quasi2d, 2, 3 (got '" + s + "')");
}

int field_dimensionality(Dim d) noexcept {
  switch (d) {
  case Dim::one: return 1;
  case Dim::quasi2d:
  case Dim::two: return 2;
  case Dim::three: return 3;
  }
  return 1;
}

std::string dim_name(Dim d) {
  switch (d) {
  case Dim::one: return "1";
  case Dim::quasi2d: return "quasi2d";
  case Dim::two: return "2";
  case Dim::three: return "3";
  }
  return "?";
}

double parse_width(const std::string &s) {
  if (s == "inf" || s == "Inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  const double w = parse_number(s, "--W");
  if (!(w > 0.0)) throw UsageError("--W must be positive or 'inf'");
  return w;
}

GridSpec parse_grid(const std::string &s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("grid must look like <extent>:<step>, got '" + s + "'");
  GridSpec g{parse_number(s.substr(0, colon), "grid extent"),
             parse_number(s.substr(colon + 1), "grid step")};
  if (!(g.extent > 0.0) || !(g.step > 0.0) || g.step > g.extent)
    throw UsageError("grid needs 0 < step <= extent, got '" + s + "'");
  if (g.extent / g.step > 1e7) throw UsageError("grid '" + s + "' has too many points");
  return g;
}

ScaleSpec parse_scale(const std::string &s) {
  if (s == "origin") return {ScalingKind::matched_at_origin, 0.0};
  if (s == "raw") return {ScalingKind::raw, 0.0};
  if (s.rfind("ref:", 0) == 0) {
    const double x = parse_number(s.substr(4), "--scale reference");
    return {ScalingKind::matched_at_reference, x};
  }
  throw UsageError("--scale must be origin, raw or ref:<xi0> (got '" + s + "')");
}

realspace::CutoffShape parse_cutoff_shape(const std::string &s) {
  if (s == "gaussian") return realspace::CutoffShape::gaussian;
  if (s == "box") return realspace::CutoffShape::box;
  throw UsageError("--cutoff-shape must be gaussian or box");
}

UnitMode parse_units(const std::string &s) {
  if (s == "scaled") return UnitMode::scaled;
  if (s == "atomic") return UnitMode::atomic;
  throw UsageError("--units must be scaled or atomic");
}

std::vector<double> half_axis(const GridSpec &g) {
  const auto n = static_cast<std::size_t>(std::floor(g.extent / g.step * (1.0 + 1e-12)));
  std::vector<double> pts(n + 1);
  for (std::size_t i = 0; i <= n; ++i) pts[i] = static_cast<double>(i) * g.step;
  return pts;
}

std::vector<double> full_axis(const GridSpec &g) {
  const auto half = half_axis(g);
  std::vector<double> pts;
  pts.reserve(2 * half.size() - 1);
  for (std::size_t i = half.size() - 1; i > 0; --i) pts.push_back(-half[i]);
  pts.insert(pts.end(), half.begin(), half.end());
  return pts;
}

std::string scaling_name(ScalingKind k) {
  switch (k) {
  case ScalingKind::raw: return "raw";
  case ScalingKind::matched_at_origin: return "matched_at_origin";
  case ScalingKind::matched_at_reference: return "matched_at_reference";
  }
  return "?";
}

} // namespace paircorr::cli
