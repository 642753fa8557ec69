#pragma once

#include <array>
#include <complex>

#include "paircorr/cvec4.hpp"
#include "paircorr/kinematics.hpp"

namespace paircorr::dirac {

using cplx = std::complex<double>;
using Spinor = std::array<cplx, 4>;

enum class Particle { electron, positron };

// Free Dirac spinor in the standard (Dirac) representation, scaled units.
// The squared norm equals the energy: the plane-wave factor sqrt(1/E)
// is applied by whoever builds a normalized eigenfunction.
struct SpinorState {
  Spinor components{};
  double energy = 1.0;
  Particle kind = Particle::electron;
};

// mu_p = sqrt((E+1)/2) (1, 0, 0, p+/(E+1)),  p+ = Px + i Py.
// Throws UnsupportedOperation for 3D momenta.
SpinorState electron_spinor(const ScaledMomentum &p);

// nu_n = sqrt((E+1)/2) (n-/(E+1), 0, 0, 1),  n- = Nx - i Ny.
SpinorState positron_spinor(const ScaledMomentum &n);

// d nu_n / d N_x at fixed N_y, same layout as positron_spinor.
Spinor positron_spinor_dx(const ScaledMomentum &n);

double spinor_norm(const SpinorState &s) noexcept;

// mu_p^dagger nu_n. Requires P_y(electron) == -N_y(positron).
cplx spinor_bilinear(const ScaledMomentum &p_electron,
                     const ScaledMomentum &n_positron);

// mu_p^dagger nu_n / (p_x + n_x), evaluated in a form with no cancellation,
// so it stays finite (and exact) at p_x + n_x = 0.
cplx bilinear_over_transfer(const ScaledMomentum &p_electron,
                            const ScaledMomentum &n_positron);

// C psi^* with C = i gamma^2 in the Dirac representation.
Spinor charge_conjugate(const Spinor &psi) noexcept;

// The four non-vanishing entries of mu_p (x) C nu_n^*, ordered
// (1,1), (1,4), (4,1), (4,4). This is the spinor column of the pair
// wavefunction; the other twelve entries are identically zero.
using PairColumn = CVec4;
PairColumn pair_tensor(const ScaledMomentum &p_electron,
                       const ScaledMomentum &n_positron);

} // namespace paircorr::dirac
