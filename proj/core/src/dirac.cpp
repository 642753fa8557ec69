#include "paircorr/dirac.hpp"

#include <cmath>

namespace paircorr::dirac {

namespace {

void require_planar(const ScaledMomentum &p, const char *what) {
  if (p.dim() > 2)
    throw UnsupportedOperation(std::string(what) +
                               ": 3D spinors are not constructed explicitly");
}

void require_transverse_match(const ScaledMomentum &p, const ScaledMomentum &n) {
  const double tol = 1e-12 * (1.0 + std::abs(p.y()) + std::abs(n.y()));
  if (std::abs(p.y() + n.y()) > tol)
    throw ContractViolation("transverse momentum not conserved: P_y != -N_y");
}

} // namespace

SpinorState electron_spinor(const ScaledMomentum &p) {
  require_planar(p, "electron_spinor");
  const double e = energy(p);
  const double amp = std::sqrt(0.5 * (e + 1.0));
  const cplx p_plus(p.x(), p.y());
  SpinorState s;
  s.energy = e;
  s.kind = Particle::electron;
#ifdef PAIRCORR_MUTATE_SPINOR_SIGN
  // Test-only mutation: wrong sign on the lower component.
  s.components = {amp, 0.0, 0.0, -amp * p_plus / (e + 1.0)};
#else
  s.components = {amp, 0.0, 0.0, amp * p_plus / (e + 1.0)};
#endif
  return s;
}

SpinorState positron_spinor(const ScaledMomentum &n) {
  require_planar(n, "positron_spinor");
  const double e = energy(n);
  const double amp = std::sqrt(0.5 * (e + 1.0));
  const cplx n_minus(n.x(), -n.y());
  SpinorState s;
  s.energy = e;
  s.kind = Particle::positron;
  s.components = {amp * n_minus / (e + 1.0), 0.0, 0.0, amp};
  return s;
}

Spinor positron_spinor_dx(const ScaledMomentum &n) {
  require_planar(n, "positron_spinor_dx");
  const double e = energy(n);
  const double amp = std::sqrt(0.5 * (e + 1.0));
  const double d_amp = n.x() / (4.0 * amp * e);
  const cplx n_minus(n.x(), -n.y());
  const cplx w = n_minus / (e + 1.0);
  const cplx dw = 1.0 / (e + 1.0) - n_minus * n.x() / (e * (e + 1.0) * (e + 1.0));
  return {d_amp * w + amp * dw, 0.0, 0.0, d_amp};
}

double spinor_norm(const SpinorState &s) noexcept {
  double sum = 0.0;
  for (const auto &c : s.components) sum += std::norm(c);
  return sum;
}

cplx spinor_bilinear(const ScaledMomentum &p_electron,
                     const ScaledMomentum &n_positron) {
  require_transverse_match(p_electron, n_positron);
  const auto mu = electron_spinor(p_electron);
  const auto nu = positron_spinor(n_positron);
  cplx sum = 0.0;
  for (int i = 0; i < 4; ++i) sum += std::conj(mu.components[i]) * nu.components[i];
  return sum;
}

cplx bilinear_over_transfer(const ScaledMomentum &p_electron,
                            const ScaledMomentum &n_positron) {
  require_planar(p_electron, "bilinear_over_transfer");
  require_planar(n_positron, "bilinear_over_transfer");
  require_transverse_match(p_electron, n_positron);
  // mu^dagger nu = A [g(a) - g(b)] with g(k) = (k + i t)/(E(k) + 1),
  // a = N_x, b = -P_x, t = P_y. The divided difference is expanded so that
  // the factor (a - b) cancels analytically.
  const double a = n_positron.x();
  const double b = -p_electron.x();
  const double t = p_electron.y();
  const double ea = std::sqrt(1.0 + a * a + t * t);
  const double eb = std::sqrt(1.0 + b * b + t * t);
  const double s = (a + b) / (ea + eb);
  const cplx num(1.0 + eb - b * s, -t * s);
  const cplx divided = num / ((ea + 1.0) * (eb + 1.0));
  const double norm = 0.5 * std::sqrt((eb + 1.0) * (ea + 1.0));
  return norm * divided;
}

Spinor charge_conjugate(const Spinor &psi) noexcept {
  return {std::conj(psi[3]), -std::conj(psi[2]), -std::conj(psi[1]),
          std::conj(psi[0])};
}

PairColumn pair_tensor(const ScaledMomentum &p_electron,
                       const ScaledMomentum &n_positron) {
  const auto mu = electron_spinor(p_electron).components;
  const auto cnu = charge_conjugate(positron_spinor(n_positron).components);
  return {mu[0] * cnu[0], mu[0] * cnu[3], mu[3] * cnu[0], mu[3] * cnu[3]};
}

} // namespace paircorr::dirac
