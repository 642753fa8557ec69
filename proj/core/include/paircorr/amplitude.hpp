#pragma once

#include <array>
#include <complex>
#include <cstddef>

#include "paircorr/dirac.hpp"
#include "paircorr/kinematics.hpp"
#include "paircorr/quadrature.hpp"
#include "paircorr/sauter.hpp"

namespace paircorr::amplitude {

using cplx = std::complex<double>;

// <p|V|n> between an electron plane wave p and a negative-energy plane wave
// n, in scaled units with the 1/(2 pi) plane-wave normalization of one
// longitudinal dimension. Momenta are scaled (units of m c).
struct MatrixElement {
  cplx value;
  ScaledMomentum p;
  ScaledMomentum n;
  double q;  // longitudinal momentum transfer p_x + n_x
};

// V_pn = (1/2pi) (1/sqrt(E_p E_n)) mu_p^dag nu_n FT[V](p_x + n_x), evaluated
// as (mu^dag nu / q) (q FT) so it is finite and continuous through q = 0.
// Transverse components must satisfy p_y = -n_y. Requires finite W.
MatrixElement matrix_element(const ScaledMomentum &p, const ScaledMomentum &n,
                             const FieldConfig &f);

// First-order expansion coefficient A_pn = i V_pn t. t must be >= 0; the
// t << 1/c^2 validity window is the caller's responsibility.
cplx early_amplitude(const ScaledMomentum &p, const ScaledMomentum &n,
                     const FieldConfig &f, double t);

enum class Normalization { raw, scaled_to_origin };

// Momentum-space reduced pair wavefunction for the infinite-width field: the
// four spinor entries of the column multiplying exp(i P xi).
struct PairAmplitude {
  CVec4 components{};
  ScaledMomentum momentum;
  Normalization normalization = Normalization::raw;

  double density() const noexcept { return components.norm2(); }
};

// phi0(P) = [(E + 1 + Py^2 + i Px Py)/E^3] (1, -w, w, -w^2), w = (Px+iPy)/(1+E).
// Built from the spinors: the linear ramp differentiates mu^dag nu along the
// longitudinal positron momentum at n = -P, which supplies the prefactor,
// and mu_P (x) C nu_{-P}^* supplies the column.
PairAmplitude reduced_momentum_wavefunction(const ScaledMomentum &P);

// Same quantity from the printed closed form, independent of the spinor code.
PairAmplitude reduced_momentum_wavefunction_closed_form(const ScaledMomentum &P);

// Integrand of the 1D finite-width pair wavefunction phi0(x1, x2):
//   i V_pn (1/2pi) (1/sqrt(E_p E_n)) [mu_p (x) C nu_n^*],
// so that phi0(x1, 0) = int dp e^{i p x1} int dn (this).
dirac::PairColumn finite_width_joint_amplitude_1d(double p, double n, const FieldConfig &f);

// G(p) = int dn finite_width_joint_amplitude_1d(p, n): the momentum-space
// electron amplitude with the positron detected at x = 0.
dirac::PairColumn conditional_amplitude_1d(double p, const FieldConfig &f,
                                           const quad::QuadratureSpec &spec = {});

struct ProbabilityReport {
  double probability = 0.0;   // t^2 * integral
  double integral = 0.0;      // int dp dn |V_pn|^2 over |p + n| <= cutoff
  double error_estimate = 0.0;
  double time = 0.0;
  double cutoff = 0.0;
  std::size_t evaluations = 0;
};

// P(t) = t^2 int dp dn |V_pn|^2 in 1D kinematics. The integral runs over the
// relative momentum (p - n)/2 on the whole line and the transfer p + n inside
// [-cutoff, cutoff]; the transfer is where the exponential Sauter tail lives.
// Throws QuadratureFailure with the achieved error if the tolerance is missed.
ProbabilityReport pair_probability(const FieldConfig &f, double t, double cutoff,
                                   const quad::QuadratureSpec &spec = {});

// Transfer cutoff at which the Sauter tail (q FT)^2 ~ exp(-pi q W) has dropped
// below ~1e-16 of its peak.
double adapted_cutoff(const FieldConfig &f);


} // namespace paircorr::amplitude
