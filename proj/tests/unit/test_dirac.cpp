#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "paircorr/dirac.hpp"
#include "paircorr/error.hpp"

using namespace paircorr;
using namespace paircorr::dirac;

namespace {

double norm2(const Spinor &s) {
  double n = 0.0;
  for (const auto &c : s) n += std::norm(c);
  return n;
}

cplx hand_dot(const Spinor &a, const Spinor &b) {
  cplx d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d += std::conj(a[i]) * b[i];
  return d;
}

std::vector<ScaledMomentum> samples(unsigned seed, std::size_t n = 200, double range = 8.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-range, range);
  std::vector<ScaledMomentum> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(ScaledMomentum::d2(u(rng), u(rng)));
  return out;
}

} // namespace

TEST(Energy, Examples) {
  EXPECT_DOUBLE_EQ(energy(ScaledMomentum::d2(0, 0)), 1.0);
  EXPECT_DOUBLE_EQ(energy(ScaledMomentum::d2(1, 0)), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(energy(ScaledMomentum::d3(1, 1, 1)), 2.0);
}

TEST(Energy, EvenInEveryComponent) {
  for (const auto &p : samples(1)) EXPECT_EQ(energy(p), energy(-p));
  EXPECT_EQ(energy(ScaledMomentum::d3(1, -2, 3)), energy(ScaledMomentum::d3(-1, 2, -3)));
}

TEST(ScaledMomentumType, RejectsNonFinite) {
  EXPECT_THROW(ScaledMomentum::d1(NAN), ContractViolation);
  EXPECT_THROW(ScaledMomentum::d2(0.0, INFINITY), ContractViolation);
}

TEST(ElectronSpinor, RestFrame) {
  const auto s = electron_spinor(ScaledMomentum::d2(0, 0));
  EXPECT_EQ(s.kind, Particle::electron);
  EXPECT_DOUBLE_EQ(s.energy, 1.0);
  EXPECT_EQ(s.components[0], cplx(1.0));
  EXPECT_EQ(s.components[1], cplx(0.0));
  EXPECT_EQ(s.components[2], cplx(0.0));
  EXPECT_EQ(s.components[3], cplx(0.0));
}

TEST(ElectronSpinor, UnitLongitudinalMomentum) {
  // E = sqrt2, (E+1) = 2.41421..., prefactor sqrt((E+1)/2).
  const double e1 = std::sqrt(2.0) + 1.0;
  const auto s = electron_spinor(ScaledMomentum::d2(1, 0));
  const double pre = std::sqrt(e1 / 2.0);
  EXPECT_NEAR(s.components[0].real(), pre, 1e-15);
  EXPECT_NEAR(s.components[3].real(), pre / e1, 1e-15);
  EXPECT_EQ(s.components[3].imag(), 0.0);
  // independent arithmetic for the norm: pre^2 (1 + 1/e1^2) = E
  EXPECT_NEAR(pre * pre * (1.0 + 1.0 / (e1 * e1)), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(spinor_norm(s), std::sqrt(2.0), 1e-15);
}

TEST(ElectronSpinor, TransverseMomentumGivesImaginaryLowerComponent) {
  const auto s = electron_spinor(ScaledMomentum::d2(0, 1));
  EXPECT_EQ(s.components[3].real(), 0.0);
  EXPECT_GT(s.components[3].imag(), 0.0);
}

TEST(ElectronSpinor, ThreeDimensionalInputUnsupported) {
  EXPECT_THROW(electron_spinor(ScaledMomentum::d3(0, 0, 1)), UnsupportedOperation);
  EXPECT_THROW(positron_spinor(ScaledMomentum::d3(0, 0, 1)), UnsupportedOperation);
}

TEST(PositronSpinor, Examples) {
  const auto rest = positron_spinor(ScaledMomentum::d2(0, 0));
  EXPECT_EQ(rest.kind, Particle::positron);
  EXPECT_EQ(rest.components[3], cplx(1.0));
  EXPECT_EQ(rest.components[0], cplx(0.0));

  const auto s = positron_spinor(ScaledMomentum::d2(1, 0));
  EXPECT_GT(s.components[0].real(), 0.0);
  EXPECT_EQ(s.components[0].imag(), 0.0);

  EXPECT_NEAR(spinor_norm(positron_spinor(ScaledMomentum::d2(2, 3))), std::sqrt(14.0), 1e-14);
}

TEST(SpinorNorm, Examples) {
  EXPECT_DOUBLE_EQ(spinor_norm(electron_spinor(ScaledMomentum::d2(0, 0))), 1.0);
  EXPECT_NEAR(spinor_norm(electron_spinor(ScaledMomentum::d2(1, 0))), 1.4142135623730951, 1e-15);
  EXPECT_NEAR(spinor_norm(positron_spinor(ScaledMomentum::d2(0, 2))), 2.2360679774997898, 1e-15);
}

TEST(SpinorNorm, EqualsEnergyEverywhere) {
  for (const auto &p : samples(2)) {
    EXPECT_NEAR(spinor_norm(electron_spinor(p)) / energy(p), 1.0, 1e-12);
    EXPECT_NEAR(spinor_norm(positron_spinor(p)) / energy(p), 1.0, 1e-12);
    EXPECT_NEAR(norm2(electron_spinor(p).components), energy(p), 1e-12 * energy(p));
  }
}

// Golden values pin the component layout. A permutation or sign change in
// either spinor changes these numbers.
TEST(SpinorLayout, Golden) {
  const auto mu = electron_spinor(ScaledMomentum::d2(0.75, -0.5)).components;
  const auto nu = positron_spinor(ScaledMomentum::d2(-0.75, 0.5)).components;
  const double e = std::sqrt(1.0 + 0.5625 + 0.25);
  const double pre = std::sqrt((e + 1.0) / 2.0);
  const cplx pplus(0.75, -0.5);
  const cplx nminus(-0.75, -0.5);
  const Spinor mu_ref{pre, 0.0, 0.0, pre * pplus / (e + 1.0)};
  const Spinor nu_ref{pre * nminus / (e + 1.0), 0.0, 0.0, pre};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(std::abs(mu[i] - mu_ref[i]), 0.0, 1e-15) << "mu component " << i;
    EXPECT_NEAR(std::abs(nu[i] - nu_ref[i]), 0.0, 1e-15) << "nu component " << i;
  }
  // Literal digits, evaluated independently in Python from the same formulas.
  EXPECT_NEAR(mu[0].real(), 1.0831184611536326, 1e-15);
  EXPECT_NEAR(mu[3].real(), 0.3462225171571598, 1e-15);
  EXPECT_NEAR(mu[3].imag(), -0.2308150114381065, 1e-15);
}

TEST(SpinorBilinear, Examples) {
  EXPECT_EQ(spinor_bilinear(ScaledMomentum::d2(0, 0), ScaledMomentum::d2(0, 0)), cplx(0.0));

  const auto pn = ScaledMomentum::d2(1, 0);
  const cplx b = spinor_bilinear(pn, pn);
  EXPECT_NE(b.real(), 0.0);
  EXPECT_EQ(b.imag(), 0.0);
  const cplx oracle = hand_dot(electron_spinor(pn).components, positron_spinor(pn).components);
  EXPECT_NEAR(std::abs(b - oracle), 0.0, 1e-15);

  for (double q : {0.5, 2.0})
    EXPECT_NEAR(std::abs(spinor_bilinear(ScaledMomentum::d1(q), ScaledMomentum::d1(-q))), 0.0,
                1e-12);
}

TEST(SpinorBilinear, VanishesAtOppositeMomenta) {
  for (const auto &p : samples(3))
    EXPECT_NEAR(std::abs(spinor_bilinear(p, -p)), 0.0, 1e-12);
}

TEST(SpinorBilinear, TransverseMismatchIsAContractViolation) {
  EXPECT_THROW(spinor_bilinear(ScaledMomentum::d2(0, 1), ScaledMomentum::d2(0, 1)),
               ContractViolation);
  EXPECT_NO_THROW(spinor_bilinear(ScaledMomentum::d2(0, 1), ScaledMomentum::d2(3, -1)));
}

TEST(BilinearOverTransfer, MatchesQuotientAwayFromZero) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int i = 0; i < 200; ++i) {
    const double px = u(rng), nx = u(rng), py = u(rng);
    if (std::abs(px + nx) < 1e-3) continue;
    const auto p = ScaledMomentum::d2(px, py);
    const auto n = ScaledMomentum::d2(nx, -py);
    const cplx direct = spinor_bilinear(p, n) / (px + nx);
    EXPECT_NEAR(std::abs(bilinear_over_transfer(p, n) - direct), 0.0, 1e-12 * (1.0 + std::abs(direct)));
  }
}

TEST(BilinearOverTransfer, FiniteAndContinuousAtZeroTransfer) {
  for (double px : {-2.0, 0.0, 0.3, 5.0}) {
    const auto p = ScaledMomentum::d2(px, 0.4);
    const cplx at = bilinear_over_transfer(p, ScaledMomentum::d2(-px, -0.4));
    ASSERT_TRUE(std::isfinite(std::abs(at)));
    EXPECT_GT(std::abs(at), 0.0);
    const cplx near = bilinear_over_transfer(p, ScaledMomentum::d2(-px + 1e-7, -0.4));
    EXPECT_NEAR(std::abs(near - at), 0.0, 1e-6 * std::abs(at));
  }
}

TEST(PositronSpinorDerivative, MatchesCentralDifference) {
  for (const auto &n : samples(6, 50, 3.0)) {
    const double h = 1e-5;
    const auto up = positron_spinor(ScaledMomentum::d2(n.x() + h, n.y())).components;
    const auto dn = positron_spinor(ScaledMomentum::d2(n.x() - h, n.y())).components;
    const auto d = positron_spinor_dx(n);
    for (std::size_t i = 0; i < 4; ++i)
      EXPECT_NEAR(std::abs(d[i] - (up[i] - dn[i]) / (2.0 * h)), 0.0, 1e-8);
  }
}

TEST(ChargeConjugation, LayoutAndInvolution) {
  const Spinor psi{cplx(1, 2), cplx(3, 4), cplx(5, 6), cplx(7, 8)};
  const auto c = charge_conjugate(psi);
  EXPECT_EQ(c[0], cplx(7, -8));
  EXPECT_EQ(c[1], cplx(-5, 6));
  EXPECT_EQ(c[2], cplx(-3, 4));
  EXPECT_EQ(c[3], cplx(1, -2));
  const auto back = charge_conjugate(c);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(back[i], psi[i]);
}

TEST(PairTensor, EntriesAreProductsOfSpinorComponents) {
  const auto p = ScaledMomentum::d2(0.4, 1.1);
  const auto n = ScaledMomentum::d2(-0.2, -1.1);
  const auto mu = electron_spinor(p).components;
  const auto cn = charge_conjugate(positron_spinor(n).components);
  const auto t = pair_tensor(p, n);
  EXPECT_NEAR(std::abs(t[0] - mu[0] * cn[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t[1] - mu[0] * cn[3]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t[2] - mu[3] * cn[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t[3] - mu[3] * cn[3]), 0.0, 1e-15);
  // the remaining products vanish because mu and C nu^* have zero middle entries
  EXPECT_EQ(mu[1], cplx(0.0));
  EXPECT_EQ(cn[1], cplx(0.0));
}
