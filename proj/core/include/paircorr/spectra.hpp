#pragma once

#include <functional>
#include <span>

#include "paircorr/density_grid.hpp"
#include "paircorr/kinematics.hpp"
#include "paircorr/quadrature.hpp"
#include "paircorr/sauter.hpp"

namespace paircorr::spectra {

// Infinite-width closed forms, scaled momenta.

// 4 (1 + Py^2) / (1 + Px^2 + Py^2)^2
double joint_spectrum_2d(const ScaledMomentum &P) noexcept;
// 1D slice Py = 0: 4 / (1 + Px^2)^2
double spectrum_1d(double px) noexcept;
// 2 pi (1+Px^2)^{-1/2} + 2 pi (1+Px^2)^{-3/2}
double marginal_longitudinal_2d(double px) noexcept;
// 2 pi (1+Py^2)^{-1/2}
double marginal_transverse_2d(double py) noexcept;
// 8 (1 + Py^2 + Pz^2) / (1 + |P|^2)^2
double joint_spectrum_3d(const ScaledMomentum &P) noexcept;

// Eq.-(9) spectrum integrated over the transverse disc of radius cutoff at
// fixed Px:  8 pi [ln((A + L^2)/A) + (1 - A)(1/A - 1/(A + L^2))],  A = 1 + Px^2.
// The unregulated integral diverges logarithmically. Throws ContractViolation
// for cutoff <= 0.
double regulated_marginal_3d(double px, double cutoff);
// Same for a transverse component (Py, integrating over the (Px, Pz) disc):
//   4 pi [ln((B + L^2)/B) + L^2/(B + L^2)],  B = 1 + Py^2.
double regulated_marginal_3d_transverse(double py, double cutoff);

// Fixed-Py slice of the 2D spectrum; divided by its Px = 0 value when
// scaled_to_origin is set.
double quasi2d_spectrum(double px, double py, bool scaled_to_origin = false) noexcept;

// Finite-width spectra from |V_pn|^2, integrated over the longitudinal
// transfer q = p_x + n_x at fixed relative momentum Px = (p_x - n_x)/2 and
// with n_y = -p_y = -Py.

struct FiniteWidthValue {
  double value = 0.0;
  double error_estimate = 0.0;
};

FiniteWidthValue finite_width_spectrum_1d(double px, const FieldConfig &f,
                                          const quad::QuadratureSpec &spec = {});
FiniteWidthValue finite_width_spectrum_2d(double px, double py, const FieldConfig &f,
                                          const quad::QuadratureSpec &spec = {});

enum class MarginalAxis { longitudinal, transverse };

// int dPy (or dPx) of finite_width_spectrum_2d over the whole line.
FiniteWidthValue finite_width_marginal_2d(MarginalAxis axis, double value,
                                          const FieldConfig &f,
                                          const quad::QuadratureSpec &spec = {});

// Evaluates fn on every point (in parallel, deterministic placement) and
// wraps the result in a 1D DensityGrid.
DensityGrid sample(const std::function<double(double)> &fn, std::span<const double> points,
                   Axis axis, GridMetadata meta = {});

// Half-width of a smooth even curve: first x > reference where
// fn(x) = fraction * fn(reference). Brackets by doubling from `initial`,
// then bisects to ~1e-14.
WidthReport half_width(const std::function<double(double)> &fn, WidthMetric metric = {},
                       double reference = 0.0, double initial = 0.25);

} // namespace paircorr::spectra
