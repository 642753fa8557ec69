#include "manifest.hpp"

#include <cmath>
#include <filesystem>

#ifndef PAIRCORR_VERSION
#define PAIRCORR_VERSION "0.0.0"
#endif

namespace paircorr::cli {

std::string tool_version() { return PAIRCORR_VERSION; }

nlohmann::json manifest_header(const std::string &command) {
  nlohmann::json m;
  m["schema"] = kManifestSchema;
  m["tool"] = {{"name", "paircorr"}, {"version", tool_version()}};
  m["command"] = command;
  return m;
}

nlohmann::json number_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

nlohmann::json to_json(const FieldConfig &f) {
  return {{"V0", f.v0()}, {"W", number_or_inf(f.width())}, {"dimensionality", f.dimensionality()}};
}

nlohmann::json to_json(const WidthReport &w, const std::string &curve) {
  nlohmann::json j;
  j["curve"] = curve;
  j["metric"] = w.metric.kind == WidthKind::fwhm ? "half_width_at_half_maximum"
                                                 : "half_width_at_fraction";
  j["fraction"] = w.metric.kind == WidthKind::fwhm ? 0.5 : w.metric.fraction;
  j["reference"] = w.reference;
  j["value"] = w.value;
  j["bracket"] = {w.bracket_lo, w.bracket_hi};
  return j;
}

std::string manifest_path_for(const std::string &csv_path) {
  std::filesystem::path p(csv_path);
  if (p.extension() == ".csv") p.replace_extension();
  return p.string() + ".manifest.json";
}

} // namespace paircorr::cli
