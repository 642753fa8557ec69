#pragma once

#include <optional>
#include <string>

#include "csv.hpp"
#include "manifest.hpp"
#include "options.hpp"

namespace paircorr::cli {

// A dataset ready to be written: the table and the manifest describing it.
// Commands never touch the filesystem; cli.cpp does, so a failure halfway
// through leaves nothing behind.
struct Dataset {
  CsvTable table;
  nlohmann::json manifest;
};

Dataset run_spectrum(const CommonOptions &opts);
Dataset run_density(const CommonOptions &opts);

struct ProbabilityOptions {
  std::string width;
  double v0 = 2.0;
  double t = 0.0;
  std::optional<double> cutoff;
};

// P(t) at the requested cutoff and at twice it; the relative change is the
// reported cutoff sensitivity.
nlohmann::json run_probability(const ProbabilityOptions &opts);

// Matching fraction for 2D marginal widths: low enough that the crossing
// sits outside the cutoff-dominated core around xi = 0.
inline constexpr double kMarginalWidthFraction = 0.01;

} // namespace paircorr::cli
