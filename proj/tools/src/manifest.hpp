#pragma once

#include <string>

#include <json.hpp>

#include "paircorr/density_grid.hpp"
#include "paircorr/sauter.hpp"

namespace paircorr::cli {

inline constexpr const char *kManifestSchema = "paircorr-manifest/1";

std::string tool_version();

// Skeleton shared by every command: schema, tool, command name.
nlohmann::json manifest_header(const std::string &command);

nlohmann::json to_json(const FieldConfig &f);
nlohmann::json to_json(const WidthReport &w, const std::string &curve);
// JSON has no infinity; widths and cutoffs that can be infinite go through
// this and come out as the string "inf".
nlohmann::json number_or_inf(double v);

// "out/data.csv" -> "out/data.manifest.json"
std::string manifest_path_for(const std::string &csv_path);

} // namespace paircorr::cli
