#include "paircorr/amplitude.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace paircorr::amplitude {

namespace {

constexpr double kInvTwoPi = 0.5 / std::numbers::pi;
// s = pi q W / 2 range over which (q FT)(s) = -i V0 s/sinh(s) is kept;
// beyond it the integrand is below 1e-16 of its peak.
constexpr double kTransferSpan = 40.0;

void require_finite_width(const FieldConfig &f, const char *what) {
  if (f.is_infinite_width())
    throw UnsupportedOperation(std::string(what) + " requires a finite field width");
}

} // namespace

MatrixElement matrix_element(const ScaledMomentum &p, const ScaledMomentum &n,
                             const FieldConfig &f) {
  require_finite_width(f, "matrix_element");
  const double q = p.x() + n.x();
  const cplx ratio = dirac::bilinear_over_transfer(p, n);
  const cplx qft = sauter::q_times_potential_ft(q, f);
  const double norm = kInvTwoPi / std::sqrt(energy(p) * energy(n));
  return {norm * ratio * qft, p, n, q};
}

cplx early_amplitude(const ScaledMomentum &p, const ScaledMomentum &n,
                     const FieldConfig &f, double t) {
  if (!(t >= 0.0)) throw ContractViolation("early_amplitude: t must be >= 0");
  return cplx(0.0, t) * matrix_element(p, n, f).value;
}

PairAmplitude reduced_momentum_wavefunction(const ScaledMomentum &P) {
  if (P.dim() > 2)
    throw UnsupportedOperation("reduced_momentum_wavefunction: 3D is exposed only as a spectrum");
  const ScaledMomentum n = -P;
  const auto mu = dirac::electron_spinor(P);
  const auto dnu = dirac::positron_spinor_dx(n);
  cplx derivative = 0.0;
  for (int i = 0; i < 4; ++i) derivative += std::conj(mu.components[i]) * dnu[i];
  const double e = mu.energy;
  PairAmplitude out;
  out.momentum = P;
  out.components = dirac::pair_tensor(P, n) * (4.0 * derivative / (e * e));
  return out;
}

PairAmplitude reduced_momentum_wavefunction_closed_form(const ScaledMomentum &P) {
  if (P.dim() > 2)
    throw UnsupportedOperation("reduced_momentum_wavefunction: 3D is exposed only as a spectrum");
  const double px = P.x();
  const double py = P.y();
  const double e = energy(P);
  const cplx pref = cplx(e + 1.0 + py * py, px * py) / (e * e * e);
  const cplx w = cplx(px, py) / (1.0 + e);
  PairAmplitude out;
  out.momentum = P;
  out.components = CVec4{{pref, -pref * w, pref * w, -pref * w * w}};
  return out;
}

dirac::PairColumn finite_width_joint_amplitude_1d(double p, double n, const FieldConfig &f) {
  const auto pm = ScaledMomentum::d1(p);
  const auto nm = ScaledMomentum::d1(n);
  const auto v = matrix_element(pm, nm, f).value;
  const double norm = kInvTwoPi / std::sqrt(energy(pm) * energy(nm));
  return dirac::pair_tensor(pm, nm) * (cplx(0.0, norm) * v);
}

dirac::PairColumn conditional_amplitude_1d(double p, const FieldConfig &f,
                                           const quad::QuadratureSpec &spec) {
  require_finite_width(f, "conditional_amplitude_1d");
  // Integrate over s = pi q W / 2 with n = q - p; dn = (2 / pi W) ds.
  const double jac = 2.0 / (std::numbers::pi * f.width());
  auto integrand = [&](double s) {
    const double q = jac * s;
    return finite_width_joint_amplitude_1d(p, q - p, f) * jac;
  };
  auto r = quad::integrate_adaptive(integrand, -kTransferSpan, kTransferSpan, spec);
  r.require("conditional_amplitude_1d");
  return r.value;
}

double adapted_cutoff(const FieldConfig &f) {
  require_finite_width(f, "adapted_cutoff");
  return 14.0 / f.width();
}

ProbabilityReport pair_probability(const FieldConfig &f, double t, double cutoff,
                                   const quad::QuadratureSpec &spec) {
  require_finite_width(f, "pair_probability");
  if (f.dimensionality() != 1)
    throw UnsupportedOperation("pair_probability: only 1D kinematics are defined");
  if (!(t >= 0.0)) throw ContractViolation("pair_probability: t must be >= 0");
  if (!(cutoff > 0.0)) throw ContractViolation("pair_probability: cutoff must be positive");

  ProbabilityReport rep;
  rep.time = t;
  rep.cutoff = cutoff;
  if (f.v0() == 0.0) return rep;

  quad::QuadratureSpec inner = spec;
  inner.rel_tol = std::min(spec.rel_tol, 1e-12);
  inner.abs_tol = std::numeric_limits<double>::min();
  std::size_t inner_evals = 0;
  bool inner_ok = true;
  // |V|^2 is even in the transfer q, so integrate q over [0, cutoff] twice.
  auto over_relative = [&](double q) {
    auto density = [&](double rel) {
      const auto m = matrix_element(ScaledMomentum::d1(rel + 0.5 * q),
                                    ScaledMomentum::d1(-rel + 0.5 * q), f);
      return std::norm(m.value);
    };
    auto r = quad::integrate_adaptive(density, -std::numeric_limits<double>::infinity(),
                                      std::numeric_limits<double>::infinity(), inner);
    inner_evals += r.evaluations;
    inner_ok = inner_ok && r.converged;
    return r.value;
  };
  quad::QuadratureSpec outer = spec;
  outer.abs_tol = std::numeric_limits<double>::min();
  auto r = quad::integrate_adaptive(over_relative, 0.0, cutoff, outer);
  rep.integral = 2.0 * r.value;
  rep.error_estimate = 2.0 * r.error_estimate;
  rep.evaluations = r.evaluations + inner_evals;
  if (!r.converged || !inner_ok)
    throw QuadratureFailure("pair_probability: " +
                                (r.converged ? std::string("inner integral not converged")
                                             : r.diagnostic),
                            rep.error_estimate);
  rep.probability = t * t * rep.integral;
  return rep;
}

} // namespace paircorr::amplitude
