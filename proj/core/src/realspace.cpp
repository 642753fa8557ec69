#include "paircorr/realspace.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "paircorr/amplitude.hpp"
#include "paircorr/lattice_fft.hpp"
#include "paircorr/parallel.hpp"

namespace paircorr::realspace {

namespace {

using cplx = std::complex<double>;

const double kInvSqrtTwoPi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

// Above this many lattice sites the 2D marginal evaluator recomputes phi on
// the fly instead of caching it (one CVec4 is 64 bytes).
constexpr std::size_t kCacheSites = std::size_t{1} << 22;

double parity(std::size_t i) { return (i & 1U) ? -1.0 : 1.0; }

// acc += v * (c + i s), spelled out: std::complex multiplication goes through
// the inf/nan-recovering library call, which dominates these inner loops.
inline void rotate_add(CVec4 &acc, const CVec4 &v, double c, double s) {
  for (std::size_t k = 0; k < 4; ++k) {
    const double re = v[k].real(), im = v[k].imag();
    acc[k] = {acc[k].real() + re * c - im * s, acc[k].imag() + re * s + im * c};
  }
}

CVec4 infinite_width_phi(double px, double py) {
  return amplitude::reduced_momentum_wavefunction(ScaledMomentum::d2(px, py)).components;
}

CVec4 regulated_phi(const MomentumLattice &lattice, double px, double py) {
  return infinite_width_phi(px, py) * lattice.weight(px * px + py * py);
}

DensityGrid curve_from_samples(const std::vector<CVec4> &samples, const MomentumLattice &lattice,
                               std::span<const double> xi, GridMetadata meta) {
  double xi_max = 0.0;
  for (double x : xi) xi_max = std::max(xi_max, std::abs(x));
  lattice.require_inside_alias(xi_max);
  std::vector<double> values(xi.size());
  parallel_for(xi.size(), [&](std::size_t i) {
    values[i] = line_transform(samples, lattice.spacing, xi[i]).norm2();
  });
  meta.cutoff = lattice.cutoff;
  meta.spacing = lattice.spacing;
  Axis axis{"xi_x", "lambda_e", std::vector<double>(xi.begin(), xi.end())};
  return DensityGrid({std::move(axis)}, std::move(values), std::move(meta));
}

} // namespace

void MomentumLattice::validate() const {
  if (!(cutoff > 0.0) || !std::isfinite(cutoff))
    throw ConfigurationError("lattice cutoff must be positive and finite");
  if (!(spacing > 0.0) || !(spacing <= cutoff))
    throw ConfigurationError("lattice spacing must lie in (0, cutoff]");
  if (extent() / spacing > 1e7) throw ConfigurationError("lattice has too many sites");
}

double MomentumLattice::weight(double p2) const {
  if (shape == CutoffShape::box) return 1.0;
  return std::exp(-p2 / (cutoff * cutoff));
}

std::size_t MomentumLattice::half_count() const {
  validate();
  return static_cast<std::size_t>(std::floor(extent() / spacing * (1.0 + 1e-12)));
}

std::size_t MomentumLattice::fft_size() const {
  return std::max<std::size_t>(4, quad::next_power_of_two(2 * half_count() + 2));
}

double MomentumLattice::xi_spacing() const {
  return 2.0 * std::numbers::pi / (static_cast<double>(fft_size()) * spacing);
}

double MomentumLattice::alias_limit() const { return std::numbers::pi / spacing; }

void MomentumLattice::require_inside_alias(double xi_max) const {
  validate();
  if (!(std::abs(xi_max) < alias_limit()))
    throw ConfigurationError("xi range " + std::to_string(xi_max) +
                             " exceeds the alias half-period pi/spacing = " +
                             std::to_string(alias_limit()) + "; refine the lattice spacing");
}

CVec4 line_transform(std::span<const CVec4> samples, double spacing, double xi) {
  const auto half = static_cast<std::ptrdiff_t>(samples.size() / 2);
  CVec4 sum{};
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double phase = static_cast<double>(static_cast<std::ptrdiff_t>(i) - half) * spacing * xi;
    rotate_add(sum, samples[i], std::cos(phase), std::sin(phase));
  }
  return sum * (kInvSqrtTwoPi * spacing);
}

Synthesis2D synthesize_2d(const MomentumLattice &lattice, double xi_max) {
  lattice.require_inside_alias(xi_max);
  const std::size_t n = lattice.fft_size();
  if (n > 4096) throw ConfigurationError("full 2D synthesis limited to 4096^2 sites; use Marginals2D");
  const auto half = static_cast<std::ptrdiff_t>(lattice.half_count());
  const auto offset = static_cast<std::ptrdiff_t>(n / 2);
  Synthesis2D out;
  out.n = n;
  out.p_spacing = lattice.spacing;
  out.xi_spacing = lattice.xi_spacing();
  out.momentum.assign(n * n, CVec4{});
  parallel_for(n, [&](std::size_t iy) {
    const std::ptrdiff_t ky = static_cast<std::ptrdiff_t>(iy) - offset;
    if (std::abs(ky) > half) return;
    for (std::size_t ix = 0; ix < n; ++ix) {
      const std::ptrdiff_t kx = static_cast<std::ptrdiff_t>(ix) - offset;
      if (std::abs(kx) > half) continue;
      out.momentum[iy * n + ix] = regulated_phi(lattice, lattice.point(kx), lattice.point(ky));
    }
  });
  out.field.assign(n * n, CVec4{});
  const double scale =
      lattice.spacing * lattice.spacing * static_cast<double>(n) / (2.0 * std::numbers::pi);
  std::vector<cplx> buffer(n * n);
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t iy = 0; iy < n; ++iy)
      for (std::size_t ix = 0; ix < n; ++ix)
        buffer[iy * n + ix] = out.momentum[iy * n + ix][c] * (parity(ix) * parity(iy));
    auto spec = quad::lattice_fft_2d(buffer, n, n, lattice.spacing, quad::FftDirection::inverse);
    for (std::size_t iy = 0; iy < n; ++iy)
      for (std::size_t ix = 0; ix < n; ++ix)
        out.field[iy * n + ix][c] = spec.values[iy * n + ix] * (scale * parity(ix) * parity(iy));
  }
  return out;
}

Synthesis1D synthesize_1d(const MomentumLattice &lattice, double py, double xi_max) {
  lattice.require_inside_alias(xi_max);
  const std::size_t n = lattice.fft_size();
  const auto half = static_cast<std::ptrdiff_t>(lattice.half_count());
  const auto offset = static_cast<std::ptrdiff_t>(n / 2);
  Synthesis1D out;
  out.n = n;
  out.p_spacing = lattice.spacing;
  out.xi_spacing = lattice.xi_spacing();
  out.momentum.assign(n, CVec4{});
  for (std::size_t i = 0; i < n; ++i) {
    const std::ptrdiff_t k = static_cast<std::ptrdiff_t>(i) - offset;
    if (std::abs(k) > half) continue;
    const double px = lattice.point(k);
    out.momentum[i] = infinite_width_phi(px, py) * lattice.weight(px * px);
  }
  out.field.assign(n, CVec4{});
  const double scale = kInvSqrtTwoPi * lattice.spacing * std::sqrt(static_cast<double>(n));
  std::vector<cplx> buffer(n);
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t i = 0; i < n; ++i) buffer[i] = out.momentum[i][c] * parity(i);
    auto spec = quad::lattice_fft(buffer, lattice.spacing, quad::FftDirection::inverse);
    for (std::size_t i = 0; i < n; ++i) out.field[i][c] = spec.values[i] * (scale * parity(i));
  }
  return out;
}

std::vector<CVec4> momentum_samples_quasi2d(double py, const MomentumLattice &lattice) {
  const auto half = static_cast<std::ptrdiff_t>(lattice.half_count());
  std::vector<CVec4> samples(lattice.count());
  parallel_for(samples.size(), [&](std::size_t i) {
    const double px = lattice.point(static_cast<std::ptrdiff_t>(i) - half);
    samples[i] = infinite_width_phi(px, py) * lattice.weight(px * px);
  });
  return samples;
}

std::vector<CVec4> momentum_samples_1d(const FieldConfig &f, const MomentumLattice &lattice) {
  if (f.is_infinite_width()) return momentum_samples_quasi2d(0.0, lattice);
  const auto half = static_cast<std::ptrdiff_t>(lattice.half_count());
  std::vector<CVec4> samples(lattice.count());
  quad::QuadratureSpec spec;
  spec.rel_tol = 1e-10;
  spec.abs_tol = 1e-14 * f.v0();
  parallel_for(samples.size(), [&](std::size_t i) {
    const double p = lattice.point(static_cast<std::ptrdiff_t>(i) - half);
    samples[i] = amplitude::conditional_amplitude_1d(p, f, spec) * lattice.weight(p * p);
  });
  return samples;
}

DensityGrid density_1d(const FieldConfig &f, const MomentumLattice &lattice,
                       std::span<const double> xi) {
  GridMetadata meta;
  meta.field = f;
  meta.description = f.is_infinite_width() ? "1D density, infinite width"
                                           : "1D density, positron at x = 0";
  return curve_from_samples(momentum_samples_1d(f, lattice), lattice, xi, std::move(meta));
}

DensityGrid density_quasi2d(double py, const MomentumLattice &lattice,
                            std::span<const double> xi) {
  if (!std::isfinite(py)) throw ContractViolation("density_quasi2d: Py must be finite");
  GridMetadata meta;
  meta.description = "quasi-2D density at fixed Py = " + std::to_string(py);
  return curve_from_samples(momentum_samples_quasi2d(py, lattice), lattice, xi, std::move(meta));
}

Marginals2D::Marginals2D(const MomentumLattice &lattice) : lattice_(lattice) {
  side_ = lattice_.count();
  if (side_ * side_ <= kCacheSites) {
    cache_.resize(side_ * side_);
    parallel_for(side_, [&](std::size_t iy) {
      for (std::size_t ix = 0; ix < side_; ++ix) {
        const auto half = static_cast<std::ptrdiff_t>(side_ / 2);
        cache_[iy * side_ + ix] =
            regulated_phi(lattice_, lattice_.point(static_cast<std::ptrdiff_t>(ix) - half),
                          lattice_.point(static_cast<std::ptrdiff_t>(iy) - half));
      }
    });
  }
}

CVec4 Marginals2D::sample(std::size_t ix, std::size_t iy) const {
  if (!cache_.empty()) return cache_[iy * side_ + ix];
  const auto half = static_cast<std::ptrdiff_t>(side_ / 2);
  return regulated_phi(lattice_, lattice_.point(static_cast<std::ptrdiff_t>(ix) - half),
                       lattice_.point(static_cast<std::ptrdiff_t>(iy) - half));
}

double Marginals2D::marginal(double xi, bool along_x) const {
  if (xi == 0.0)
    throw SingularPoint("2D marginal density is singular at xi = 0; use a reference point");
  lattice_.require_inside_alias(xi);
  const auto half = static_cast<std::ptrdiff_t>(side_ / 2);
  std::vector<double> cs(side_), sn(side_);
  for (std::size_t i = 0; i < side_; ++i) {
    const double arg = lattice_.point(static_cast<std::ptrdiff_t>(i) - half) * xi;
    cs[i] = std::cos(arg);
    sn[i] = std::sin(arg);
  }
  std::vector<double> lines(side_);
  if (along_x) {
    // One transform per Py row, contiguous in memory.
    parallel_for(side_, [&](std::size_t iy) {
      CVec4 sum{};
      for (std::size_t ix = 0; ix < side_; ++ix) rotate_add(sum, sample(ix, iy), cs[ix], sn[ix]);
      lines[iy] = sum.norm2();
    });
  } else {
    // Transform along Py for every Px column. Walk rows in order and keep one
    // running sum per column so memory is still read contiguously; blocks of
    // columns go to the workers.
    constexpr std::size_t kBlock = 64;
    const std::size_t blocks = (side_ + kBlock - 1) / kBlock;
    parallel_for(blocks, [&](std::size_t b) {
      const std::size_t lo = b * kBlock;
      const std::size_t hi = std::min(side_, lo + kBlock);
      std::array<CVec4, kBlock> sums{};
      for (std::size_t iy = 0; iy < side_; ++iy)
        for (std::size_t ix = lo; ix < hi; ++ix)
          rotate_add(sums[ix - lo], sample(ix, iy), cs[iy], sn[iy]);
      for (std::size_t ix = lo; ix < hi; ++ix) lines[ix] = sums[ix - lo].norm2();
    });
  }
  double acc = 0.0;
  for (double v : lines) acc += v;
  const double d = lattice_.spacing;
  return acc * d * d * d / (2.0 * std::numbers::pi);
}

double Marginals2D::rho_x(double xi_x) const { return marginal(xi_x, true); }
double Marginals2D::rho_y(double xi_y) const { return marginal(xi_y, false); }

DensityGrid Marginals2D::curve_x(std::span<const double> xi) const {
  std::vector<double> values(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) values[i] = rho_x(xi[i]);
  GridMetadata meta;
  meta.cutoff = lattice_.cutoff;
  meta.spacing = lattice_.spacing;
  meta.description = "2D longitudinal marginal rho(xi_x)";
  return DensityGrid({Axis{"xi_x", "lambda_e", {xi.begin(), xi.end()}}}, std::move(values),
                     std::move(meta));
}

DensityGrid Marginals2D::curve_y(std::span<const double> xi) const {
  std::vector<double> values(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) values[i] = rho_y(xi[i]);
  GridMetadata meta;
  meta.cutoff = lattice_.cutoff;
  meta.spacing = lattice_.spacing;
  meta.description = "2D transverse marginal rho(xi_y)";
  return DensityGrid({Axis{"xi_y", "lambda_e", {xi.begin(), xi.end()}}}, std::move(values),
                     std::move(meta));
}

} // namespace paircorr::realspace
