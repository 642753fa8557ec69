#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "paircorr/error.hpp"
#include "paircorr/parallel.hpp"
#include "validate.hpp"

namespace paircorr::cli {

namespace {

namespace fs = std::filesystem;

// Writes to "<path>.partial" and renames on success, so an interrupted or
// failed run never leaves a truncated file under the requested name.
class StagedFile {
public:
  explicit StagedFile(fs::path target) : target_(std::move(target)) {
    staged_ = target_;
    staged_ += ".partial";
  }
  ~StagedFile() {
    if (!committed_) {
      std::error_code ec;
      fs::remove(staged_, ec);
    }
  }
  StagedFile(const StagedFile &) = delete;
  StagedFile &operator=(const StagedFile &) = delete;

  void write(const std::string &content) {
    if (target_.has_parent_path()) fs::create_directories(target_.parent_path());
    std::ofstream out(staged_, std::ios::binary | std::ios::trunc);
    out << content;
    out.close();
    if (!out) throw std::runtime_error("cannot write " + staged_.string());
  }
  void commit() {
    fs::rename(staged_, target_);
    committed_ = true;
  }

private:
  fs::path target_;
  fs::path staged_;
  bool committed_ = false;
};

void add_common_flags(CLI::App &cmd, CommonOptions &o) {
  cmd.add_option("--dim", o.dim, "1 | quasi2d | 2 | 3")->capture_default_str();
  cmd.add_option("--W", o.width, "field width in Compton wavelengths, or inf")->capture_default_str();
  cmd.add_option("--V0", o.v0, "step height in units of m c^2")->capture_default_str();
  cmd.add_option("--py", o.py, "fixed transverse momentum (quasi2d)");
  cmd.add_option("--axis", o.axis, "x | y | z (2D/3D marginals)");
  cmd.add_option("--cutoff", o.cutoff, "3D transverse cutoff, or lattice cutoff for densities");
  cmd.add_option("--grid", o.grid, "<extent>:<step> (momentum axis or lattice)");
  cmd.add_option("--scale", o.scale, "origin | raw | ref:<xi0>");
  cmd.add_option("--units", o.units, "scaled | atomic (axis units in the CSV)")->capture_default_str();
  cmd.add_option("--out", o.out, "CSV path; the manifest goes next to it (default: stdout)");
}

std::string command_line(int argc, char **argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

void emit(Dataset &ds, const std::string &out, double seconds, const std::string &invocation) {
  ds.manifest["invocation"] = invocation;
  ds.manifest["rows"] = ds.table.rows();
  if (out.empty()) {
    // Inline manifest for piped output; wall time is left out so that the
    // stream stays byte-identical between runs.
    ds.table.comment("manifest: " + ds.manifest.dump());
    ds.table.write(std::cout);
    return;
  }
  const fs::path csv_path(out);
  const fs::path manifest_path(manifest_path_for(out));
  ds.table.comment("manifest: " + manifest_path.filename().string());
  ds.manifest["outputs"] = {{"csv", csv_path.filename().string()}};
  ds.manifest["wall_time_s"] = seconds;
  ds.manifest["threads"] = worker_count();

  std::ostringstream csv;
  ds.table.write(csv);
  StagedFile csv_file(csv_path), manifest_file(manifest_path);
  csv_file.write(csv.str());
  manifest_file.write(ds.manifest.dump(2) + "\n");
  csv_file.commit();
  manifest_file.commit();
}

template <class Body>
int guarded(Body &&body) {
  try {
    return body();
  } catch (const UsageError &e) {
    std::cerr << "paircorr: usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ConfigurationError &e) {
    std::cerr << "paircorr: configuration error: " << e.what() << "\n";
    return kUsageError;
  } catch (const QuadratureFailure &e) {
    std::cerr << "paircorr: numerical failure: " << e.what()
              << " (achieved error " << e.achieved_error() << ")\n";
    return kNumericalFailure;
  } catch (const std::exception &e) {
    std::cerr << "paircorr: numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
}

} // namespace

int run(int argc, char **argv) {
  CLI::App app{"Early-time pair wavefunctions in a Sauter field: spectra, densities, checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  CommonOptions spectrum_opts;
  auto *spectrum = app.add_subcommand("spectrum", "momentum spectra (CSV + manifest)");
  add_common_flags(*spectrum, spectrum_opts);

  CommonOptions density_opts;
  auto *density = app.add_subcommand("density", "configuration-space densities (CSV + manifest)");
  add_common_flags(*density, density_opts);
  density->add_option("--xi", density_opts.xi, "<extent>:<step> of the xi axis (default 5:0.05)");
  density->add_option("--cutoff-shape", density_opts.cutoff_shape, "gaussian | box")
      ->capture_default_str();

  std::string validate_out = "validate_report.json";
  auto *validate = app.add_subcommand("validate", "run the invariant suite; exit 1 on any failure");
  validate->add_option("--out", validate_out, "JSON report path")->capture_default_str();

  ProbabilityOptions prob_opts;
  std::string prob_out;
  auto *probability = app.add_subcommand("probability", "pair probability P(t) (JSON report)");
  probability->add_option("--W", prob_opts.width, "finite field width")->required();
  probability->add_option("--V0", prob_opts.v0, "step height")->capture_default_str();
  probability->add_option("--t", prob_opts.t, "time in hbar / m c^2")->required();
  probability->add_option("--cutoff", prob_opts.cutoff, "transfer cutoff (default 14 / W)");
  probability->add_option("--out", prob_out, "JSON report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsageError;
  }

  const std::string invocation = command_line(argc, argv);
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  if (spectrum->parsed() || density->parsed()) {
    const bool is_spectrum = spectrum->parsed();
    const CommonOptions &opts = is_spectrum ? spectrum_opts : density_opts;
    return guarded([&] {
      Dataset ds = is_spectrum ? run_spectrum(opts) : run_density(opts);
      emit(ds, opts.out, elapsed(), invocation);
      return kSuccess;
    });
  }

  if (probability->parsed()) {
    return guarded([&] {
      nlohmann::json report = run_probability(prob_opts);
      report["invocation"] = invocation;
      report["wall_time_s"] = elapsed();
      if (prob_out.empty()) {
        std::cout << report.dump(2) << "\n";
      } else {
        StagedFile f{fs::path(prob_out)};
        f.write(report.dump(2) + "\n");
        f.commit();
        std::cout << "P(t) = " << report["probability"].get<double>() << "\n";
      }
      return kSuccess;
    });
  }

  // validate
  return guarded([&] {
    const auto report = run_validation([](const CheckResult &r) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  deviation=" << r.deviation
                << "  tol=" << r.tolerance;
      if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
      std::cout << "\n" << std::flush;
    });
    nlohmann::json j = report.to_json();
    j["wall_time_s"] = elapsed();
    StagedFile f{fs::path(validate_out)};
    f.write(j.dump(2) + "\n");
    f.commit();
    std::cout << (report.all_passed() ? "all checks passed" : "validation FAILED") << " ("
              << report.checks.size() << " checks, report " << validate_out << ")\n";
    return report.all_passed() ? kSuccess : kValidationFailure;
  });
}

} // namespace paircorr::cli
