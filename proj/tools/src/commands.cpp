#include "commands.hpp"

#include <cmath>
#include <functional>

#include "paircorr/amplitude.hpp"
#include "paircorr/error.hpp"
#include "paircorr/parallel.hpp"
#include "paircorr/realspace.hpp"
#include "paircorr/spectra.hpp"

namespace paircorr::cli {

namespace {

using Curve = std::function<double(double)>;

// A curve plus the largest quadrature error seen while sampling it.
struct Sampled {
  std::vector<double> values;
  std::vector<double> errors;
};

Sampled sample_with_errors(const std::function<spectra::FiniteWidthValue(double)> &fn,
                           const std::vector<double> &pts) {
  Sampled s{std::vector<double>(pts.size()), std::vector<double>(pts.size())};
  parallel_for(pts.size(), [&](std::size_t i) {
    const auto v = fn(pts[i]);
    s.values[i] = v.value;
    s.errors[i] = v.error_estimate;
  });
  return s;
}

double max_of(const std::vector<double> &v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

// Width of a curve, or null in the manifest when the curve never drops to
// the level (e.g. a 3D marginal at a large cutoff over a short range).
nlohmann::json width_or_null(const Curve &fn, WidthMetric metric, double reference,
                             const std::string &name) {
  try {
    return to_json(spectra::half_width(fn, metric, reference), name);
  } catch (const WidthNotBracketed &) {
    return {{"curve", name}, {"value", nullptr}, {"note", "level not reached"}};
  }
}

double scale_factor(const ScaleSpec &s, const Curve &fn) {
  if (s.kind == ScalingKind::raw) return 1.0;
  const double at = s.kind == ScalingKind::matched_at_origin ? 0.0 : s.reference;
  const double v = fn(at);
  if (!(v > 0.0)) throw DomainError("curve vanishes at the matching point");
  return 1.0 / v;
}

nlohmann::json scaling_json(const ScaleSpec &s, double factor) {
  return {{"kind", scaling_name(s.kind)}, {"reference", s.reference}, {"factor", factor}};
}

void require_absent(bool present, const std::string &flag, const std::string &why) {
  if (present) throw UsageError(flag + " " + why);
}

const char *axis_label(char axis) {
  switch (axis) {
  case 'y': return "Py";
  case 'z': return "Pz";
  default: return "Px";
  }
}

char parse_axis(const std::optional<std::string> &a) {
  if (!a) return 'x';
  if (*a == "x" || *a == "y" || *a == "z") return (*a)[0];
  throw UsageError("--axis must be x, y or z");
}

} // namespace

Dataset run_spectrum(const CommonOptions &opts) {
  const Dim dim = parse_dim(opts.dim);
  const double w = parse_width(opts.width);
  const FieldConfig field(opts.v0, w, field_dimensionality(dim));
  const UnitSystem units(kSpeedOfLightAU, parse_units(opts.units));
  const ScaleSpec scale = parse_scale(opts.scale.value_or("origin"));
  const GridSpec grid = parse_grid(opts.grid.value_or("5:0.05"));
  require_absent(opts.xi.has_value(), "--xi", "applies to density only");
  require_absent(opts.py.has_value() && dim != Dim::quasi2d, "--py", "requires --dim quasi2d");
  require_absent(opts.axis.has_value() && (dim == Dim::one || dim == Dim::quasi2d), "--axis",
                 "requires --dim 2 or 3");
  require_absent(opts.cutoff.has_value() && dim != Dim::three, "--cutoff",
                 "applies to the regulated 3D marginal only");
  const char axis = parse_axis(opts.axis);
  if (dim == Dim::two && axis == 'z') throw UsageError("--axis z requires --dim 3");
  const double py = opts.py.value_or(0.0);
  const bool finite = !field.is_infinite_width();

  std::function<spectra::FiniteWidthValue(double)> fn;
  std::string description;
  switch (dim) {
  case Dim::one:
    description = "1D momentum spectrum rho(Px)";
    if (finite)
      fn = [&](double p) { return spectra::finite_width_spectrum_1d(p, field); };
    else
      fn = [](double p) { return spectra::FiniteWidthValue{spectra::spectrum_1d(p), 0.0}; };
    break;
  case Dim::quasi2d:
    description = "quasi-2D spectrum rho(Px; Py) at fixed Py";
    if (finite)
      fn = [&](double p) { return spectra::finite_width_spectrum_2d(p, py, field); };
    else
      fn = [&](double p) {
        return spectra::FiniteWidthValue{spectra::quasi2d_spectrum(p, py), 0.0};
      };
    break;
  case Dim::two: {
    const auto which =
        axis == 'x' ? spectra::MarginalAxis::longitudinal : spectra::MarginalAxis::transverse;
    description = axis == 'x' ? "2D longitudinal marginal rho(Px)" : "2D transverse marginal rho(Py)";
    if (finite)
      fn = [&, which](double p) { return spectra::finite_width_marginal_2d(which, p, field); };
    else if (axis == 'x')
      fn = [](double p) { return spectra::FiniteWidthValue{spectra::marginal_longitudinal_2d(p), 0.0}; };
    else
      fn = [](double p) { return spectra::FiniteWidthValue{spectra::marginal_transverse_2d(p), 0.0}; };
    break;
  }
  case Dim::three: {
    if (finite) throw UsageError("--dim 3 is available for --W inf only");
    if (!opts.cutoff) throw UsageError("--dim 3 needs --cutoff: the 3D marginal diverges without it");
    const double cut = *opts.cutoff;
    if (!(cut > 0.0)) throw UsageError("--cutoff must be positive");
    description = std::string("3D marginal rho(") + axis_label(axis) +
                  ") regulated by a transverse disc of radius cutoff";
    if (axis == 'x')
      fn = [cut](double p) { return spectra::FiniteWidthValue{spectra::regulated_marginal_3d(p, cut), 0.0}; };
    else
      fn = [cut](double p) {
        return spectra::FiniteWidthValue{spectra::regulated_marginal_3d_transverse(p, cut), 0.0};
      };
    break;
  }
  }

  const auto pts = half_axis(grid);
  const Sampled s = sample_with_errors(fn, pts);
  const Curve curve = [&](double p) { return fn(p).value; };
  const double factor = scale_factor(scale, curve);

  const std::string label = axis_label(axis);
  CsvTable table({label, "rho_raw", "rho_scaled", "abs_error"});
  table.comment("paircorr spectrum: " + description);
  table.describe(label, std::string("relative momentum component, ") + units.momentum_unit() +
                            " (curve is even; P >= 0 only)");
  table.describe("rho_raw", "unnormalized spectrum in scaled units");
  table.describe("rho_scaled", "rho_raw * scaling factor (" + scaling_name(scale.kind) + ")");
  table.describe("abs_error", "quadrature error estimate of rho_raw (0 for closed forms)");
  for (std::size_t i = 0; i < pts.size(); ++i)
    table.add_row({units.momentum_to_output(pts[i]), s.values[i], s.values[i] * factor, s.errors[i]});

  nlohmann::json m = manifest_header("spectrum");
  m["description"] = description;
  m["field"] = to_json(field);
  m["dim"] = dim_name(dim);
  if (dim == Dim::quasi2d) m["py"] = py;
  if (dim == Dim::two || dim == Dim::three) m["axis"] = std::string(1, axis);
  if (opts.cutoff) m["cutoff"] = *opts.cutoff;
  m["grid"] = {{"extent", grid.extent}, {"step", grid.step}, {"points", pts.size()}};
  m["units"] = {{"momentum", units.momentum_unit()}, {"c", units.c()}};
  m["scaling"] = scaling_json(scale, factor);
  m["widths"] = nlohmann::json::array(
      {width_or_null(curve, WidthMetric::half_maximum(), 0.0, "rho")});
  m["quadrature"] = {{"max_error_estimate", max_of(s.errors)}, {"evaluated", finite}};
  return {std::move(table), std::move(m)};
}

namespace {

realspace::MomentumLattice lattice_from(const CommonOptions &opts, const std::string &fallback) {
  const GridSpec g = parse_grid(opts.grid.value_or(fallback));
  realspace::MomentumLattice lattice{g.extent, g.step, parse_cutoff_shape(opts.cutoff_shape)};
  if (opts.cutoff) {
    if (!(*opts.cutoff > 0.0)) throw UsageError("--cutoff must be positive");
    lattice.cutoff = *opts.cutoff;
  }
  lattice.validate();
  return lattice;
}

nlohmann::json lattice_json(const realspace::MomentumLattice &l) {
  return {{"cutoff", l.cutoff},
          {"spacing", l.spacing},
          {"shape", l.shape == realspace::CutoffShape::box ? "box" : "gaussian"},
          {"sites_per_axis", l.count()},
          {"alias_limit", l.alias_limit()}};
}

Dataset density_line(const CommonOptions &opts, Dim dim, const FieldConfig &field,
                     const UnitSystem &units) {
  const auto lattice = lattice_from(opts, "20:0.01");
  const GridSpec xi_grid = parse_grid(opts.xi.value_or("5:0.05"));
  lattice.require_inside_alias(xi_grid.extent);
  const ScaleSpec scale = parse_scale(opts.scale.value_or("origin"));
  const double py = opts.py.value_or(0.0);

  const auto samples = dim == Dim::one ? realspace::momentum_samples_1d(field, lattice)
                                       : realspace::momentum_samples_quasi2d(py, lattice);
  const Curve curve = [&](double xi) {
    return realspace::line_transform(samples, lattice.spacing, xi).norm2();
  };
  const auto pts = full_axis(xi_grid);
  std::vector<double> values(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { values[i] = curve(pts[i]); });
  const double factor = scale_factor(scale, curve);

  const std::string description =
      dim == Dim::one ? (field.is_infinite_width() ? "1D pair density rho(xi_x), infinite width"
                                                   : "1D pair density rho(xi_x), positron at x = 0")
                      : "quasi-2D pair density rho(xi_x) at fixed Py";
  CsvTable table({"xi_x", "rho_raw", "rho_scaled"});
  table.comment("paircorr density: " + description);
  table.describe("xi_x", std::string("electron-positron separation along the field, ") +
                             units.length_unit());
  table.describe("rho_raw", "unnormalized density |phi0|^2 from the lattice synthesis");
  table.describe("rho_scaled", "rho_raw * scaling factor (" + scaling_name(scale.kind) + ")");
  for (std::size_t i = 0; i < pts.size(); ++i)
    table.add_row({units.length_to_output(pts[i]), values[i], values[i] * factor});

  nlohmann::json m = manifest_header("density");
  m["description"] = description;
  m["field"] = to_json(field);
  m["dim"] = dim_name(dim);
  if (dim == Dim::quasi2d) m["py"] = py;
  m["lattice"] = lattice_json(lattice);
  m["xi_grid"] = {{"extent", xi_grid.extent}, {"step", xi_grid.step}, {"points", pts.size()}};
  m["units"] = {{"length", units.length_unit()}, {"c", units.c()}};
  m["scaling"] = scaling_json(scale, factor);
  const double ref = scale.kind == ScalingKind::matched_at_reference ? scale.reference : 0.0;
  m["widths"] = nlohmann::json::array(
      {width_or_null(curve, WidthMetric::half_maximum(), ref, "rho")});
  m["quadrature"] = {{"conditional_amplitude_rel_tol", field.is_infinite_width() ? 0.0 : 1e-10}};
  return {std::move(table), std::move(m)};
}

Dataset density_marginals(const CommonOptions &opts, const FieldConfig &field,
                          const UnitSystem &units) {
  const auto lattice = lattice_from(opts, "20:0.1");
  const GridSpec xi_grid = parse_grid(opts.xi.value_or("5:0.05"));
  lattice.require_inside_alias(xi_grid.extent);
  const ScaleSpec scale =
      parse_scale(opts.scale.value_or("ref:" + std::to_string(realspace::kReferenceXi)));
  if (scale.kind != ScalingKind::matched_at_reference || !(scale.reference > 0.0))
    throw UsageError("2D marginals diverge at xi = 0; use --scale ref:<xi0> with xi0 > 0");
  require_absent(opts.axis.has_value() && *opts.axis == "z", "--axis z", "is not a 2D axis");

  const realspace::Marginals2D marginals(lattice);
  const Curve cx = [&](double xi) { return marginals.rho_x(xi); };
  const Curve cy = [&](double xi) { return marginals.rho_y(xi); };

  // xi = 0 is singular and never emitted; the reference point is the first
  // row so the matching is visible in the data.
  std::vector<double> pts{scale.reference};
  for (double x : half_axis(xi_grid))
    if (x > scale.reference) pts.push_back(x);
  std::vector<double> vx(pts.size()), vy(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    vx[i] = cx(pts[i]);
    vy[i] = cy(pts[i]);
  }
  const double fx = 1.0 / vx.front();
  const double fy = 1.0 / vy.front();

  CsvTable table({"xi", "rho_x_raw", "rho_x_scaled", "rho_y_raw", "rho_y_scaled"});
  table.comment("paircorr density: 2D marginals of the infinite-width pair density");
  table.comment("xi = 0 is a singular point and is not reported; curves are even, xi > 0 only");
  table.describe("xi", std::string("separation along the marginal's axis, ") + units.length_unit());
  table.describe("rho_x_raw", "longitudinal marginal int dxi_y rho(xi_x = xi, xi_y)");
  table.describe("rho_x_scaled", "rho_x_raw matched to 1 at the reference xi0");
  table.describe("rho_y_raw", "transverse marginal int dxi_x rho(xi_x, xi_y = xi)");
  table.describe("rho_y_scaled", "rho_y_raw matched to 1 at the reference xi0");
  for (std::size_t i = 0; i < pts.size(); ++i)
    table.add_row({units.length_to_output(pts[i]), vx[i], vx[i] * fx, vy[i], vy[i] * fy});

  // 1D comparison curve on the same regulator, for the width ordering.
  realspace::MomentumLattice line = lattice;
  line.spacing = std::min(lattice.spacing, 0.01);
  const auto samples = realspace::momentum_samples_1d(FieldConfig::infinite_width(field.v0(), 1), line);
  const Curve c1 = [&](double xi) {
    return realspace::line_transform(samples, line.spacing, xi).norm2();
  };

  const auto metric = WidthMetric::at_fraction(kMarginalWidthFraction);
  nlohmann::json widths = nlohmann::json::array();
  widths.push_back(width_or_null(cx, metric, scale.reference, "rho_x"));
  widths.push_back(width_or_null(cy, metric, scale.reference, "rho_y"));
  widths.push_back(width_or_null(c1, metric, scale.reference, "rho_1d"));

  nlohmann::json m = manifest_header("density");
  m["description"] = "2D longitudinal and transverse marginals";
  m["field"] = to_json(field);
  m["dim"] = "2";
  m["lattice"] = lattice_json(lattice);
  m["xi_grid"] = {{"extent", xi_grid.extent}, {"step", xi_grid.step}, {"points", pts.size()}};
  m["units"] = {{"length", units.length_unit()}, {"c", units.c()}};
  m["scaling"] = {{"kind", scaling_name(scale.kind)},
                  {"reference", scale.reference},
                  {"factor_x", fx},
                  {"factor_y", fy}};
  m["widths"] = widths;
  const auto &wx = widths[0]["value"];
  const auto &wy = widths[1]["value"];
  const auto &w1 = widths[2]["value"];
  if (wx.is_number() && wy.is_number() && w1.is_number())
    m["width_ordering"] = {{"rho_y_narrower_than_rho_x", wy.get<double>() < wx.get<double>()},
                           {"rho_x_narrower_than_1d", wx.get<double>() < w1.get<double>()}};
  return {std::move(table), std::move(m)};
}

} // namespace

Dataset run_density(const CommonOptions &opts) {
  const Dim dim = parse_dim(opts.dim);
  const FieldConfig field(opts.v0, parse_width(opts.width), field_dimensionality(dim));
  const UnitSystem units(kSpeedOfLightAU, parse_units(opts.units));
  require_absent(opts.py.has_value() && dim != Dim::quasi2d, "--py", "requires --dim quasi2d");
  switch (dim) {
  case Dim::one:
    require_absent(opts.axis.has_value(), "--axis", "requires --dim 2");
    return density_line(opts, dim, field, units);
  case Dim::quasi2d:
    require_absent(opts.axis.has_value(), "--axis", "requires --dim 2");
    if (!field.is_infinite_width())
      throw UsageError("finite-width densities are available in 1D only");
    return density_line(opts, dim, field, units);
  case Dim::two:
    if (!field.is_infinite_width())
      throw UsageError("finite-width densities are available in 1D only");
    return density_marginals(opts, field, units);
  case Dim::three:
    throw UsageError("configuration-space densities are not provided in 3D");
  }
  throw UsageError("unknown dimension");
}

nlohmann::json run_probability(const ProbabilityOptions &opts) {
  const double w = parse_width(opts.width);
  if (std::isinf(w)) throw UsageError("probability needs a finite --W");
  if (!(opts.t >= 0.0) || !std::isfinite(opts.t)) throw UsageError("--t must be finite and >= 0");
  const FieldConfig field(opts.v0, w, 1);
  const double cutoff = opts.cutoff.value_or(amplitude::adapted_cutoff(field));
  if (!(cutoff > 0.0)) throw UsageError("--cutoff must be positive");

  const auto at = amplitude::pair_probability(field, opts.t, cutoff);
  const auto doubled = amplitude::pair_probability(field, opts.t, 2.0 * cutoff);
  const double sensitivity =
      at.integral > 0.0 ? std::abs(doubled.integral - at.integral) / at.integral : 0.0;

  nlohmann::json m = manifest_header("probability");
  m["field"] = to_json(field);
  m["t"] = opts.t;
  m["cutoff"] = cutoff;
  m["cutoff_default"] = !opts.cutoff.has_value();
  m["probability"] = at.probability;
  m["integral"] = at.integral;
  m["quadrature"] = {{"error_estimate", at.error_estimate}, {"evaluations", at.evaluations}};
  m["cutoff_sensitivity"] = {{"doubled_cutoff", 2.0 * cutoff},
                             {"probability_at_doubled_cutoff", doubled.probability},
                             {"relative_change", sensitivity}};
  m["validity_note"] = "first-order amplitude, meaningful for t << 1 (units of hbar / m c^2)";
  return m;
}

} // namespace paircorr::cli
