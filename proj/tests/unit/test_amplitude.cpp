#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "paircorr/amplitude.hpp"
#include "paircorr/error.hpp"
#include "paircorr/sauter.hpp"
#include "paircorr/spectra.hpp"

using namespace paircorr;
using namespace paircorr::amplitude;

namespace {

ScaledMomentum d1(double x) { return ScaledMomentum::d1(x); }

} // namespace

TEST(MatrixElement, MatchesUnregularizedProductAwayFromZeroTransfer) {
  const FieldConfig f(2.0, 1.3);
  for (double p : {-2.0, -0.4, 0.3, 1.7})
    for (double n : {-1.1, 0.2, 0.9, 2.5}) {
      const double q = p + n;
      if (std::abs(q) < 1e-6) continue;
      const double ep = energy(d1(p)), en = energy(d1(n));
      const cplx expected = 1.0 / (2.0 * std::numbers::pi) / std::sqrt(ep * en) *
                            dirac::spinor_bilinear(d1(p), d1(n)) * sauter::potential_ft(q, f);
      const auto m = matrix_element(d1(p), d1(n), f);
      EXPECT_NEAR(std::abs(m.value - expected), 0.0, 1e-14 * (1.0 + std::abs(expected)));
      EXPECT_DOUBLE_EQ(m.q, q);
      EXPECT_EQ(m.p, d1(p));
      EXPECT_EQ(m.n, d1(n));
    }
}

// The bilinear vanishes linearly at p = -n while the transform diverges like
// 1/q, so V_pn has a finite, nonzero, continuous limit there.
TEST(MatrixElement, FiniteAndContinuousAtOppositeMomenta) {
  const FieldConfig f(2.0, 1.0);
  for (double p : {-3.0, -0.5, 0.0, 0.25, 4.0}) {
    const cplx at = matrix_element(d1(p), d1(-p), f).value;
    ASSERT_TRUE(std::isfinite(at.real()) && std::isfinite(at.imag()));
    EXPECT_GT(std::abs(at), 0.0);
    for (double h : {1e-6, -1e-6, 1e-9}) {
      const cplx near = matrix_element(d1(p + h), d1(-p), f).value;
      EXPECT_NEAR(std::abs(near - at) / std::abs(at), 0.0, 1e-5);
    }
  }
}

TEST(MatrixElement, ZeroPotentialGivesZero) {
  const FieldConfig f(0.0, 1.0);
  for (double p : {-1.0, 0.0, 2.0})
    for (double n : {-2.0, 0.5})
      EXPECT_EQ(matrix_element(d1(p), d1(n), f).value, cplx(0.0));
}

TEST(MatrixElement, WiderFieldSuppressesLargeTransfer) {
  for (double p : {0.5, 1.0})
    for (double n : {0.5, 0.8}) {
      const double w1 = std::abs(matrix_element(d1(p), d1(n), FieldConfig(2.0, 1.0)).value);
      const double w2 = std::abs(matrix_element(d1(p), d1(n), FieldConfig(2.0, 2.0)).value);
      EXPECT_LT(w2, w1);
    }
}

TEST(MatrixElement, LinearInV0) {
  const cplx a = matrix_element(d1(0.3), d1(0.4), FieldConfig(1.0, 1.0)).value;
  const cplx b = matrix_element(d1(0.3), d1(0.4), FieldConfig(3.0, 1.0)).value;
  EXPECT_NEAR(std::abs(b - 3.0 * a), 0.0, 1e-16);
}

TEST(MatrixElement, RequiresFiniteWidth) {
  EXPECT_THROW(matrix_element(d1(0.1), d1(0.2), FieldConfig::infinite_width(1.0)),
               UnsupportedOperation);
}

TEST(EarlyAmplitude, Examples) {
  const FieldConfig f(2.0, 1.0);
  const auto p = d1(0.4), n = d1(-0.1);
  EXPECT_EQ(early_amplitude(p, n, f, 0.0), cplx(0.0));
  const cplx a1 = early_amplitude(p, n, f, 1e-3);
  const cplx a2 = early_amplitude(p, n, f, 2e-3);
  EXPECT_DOUBLE_EQ(std::abs(a2), 2.0 * std::abs(a1));
  const cplx ratio = a1 / matrix_element(p, n, f).value;
  EXPECT_NEAR(ratio.real(), 0.0, 1e-18);
  EXPECT_NEAR(ratio.imag(), 1e-3, 1e-18);
  EXPECT_THROW(early_amplitude(p, n, f, -1.0), ContractViolation);
}

TEST(ReducedWavefunction, Examples) {
  const auto origin = reduced_momentum_wavefunction(ScaledMomentum::d2(0, 0));
  EXPECT_NEAR(std::abs(origin.components[0] - cplx(2.0)), 0.0, 1e-15);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_NEAR(std::abs(origin.components[i]), 0.0, 1e-15);
  EXPECT_NEAR(origin.density(), 4.0, 1e-14);
  EXPECT_NEAR(origin.density(), spectra::joint_spectrum_2d(ScaledMomentum::d2(0, 0)), 1e-14);
  EXPECT_NEAR(reduced_momentum_wavefunction(ScaledMomentum::d2(1, 0)).density(), 1.0, 1e-14);
}

TEST(ReducedWavefunction, SpinorRouteMatchesClosedFormAndJointSpectrum) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-12.0, 12.0);
  for (int i = 0; i < 10000; ++i) {
    const auto P = ScaledMomentum::d2(u(rng), u(rng));
    const auto a = reduced_momentum_wavefunction(P);
    const auto b = reduced_momentum_wavefunction_closed_form(P);
    const double rho = spectra::joint_spectrum_2d(P);
    ASSERT_NEAR(a.density() / rho, 1.0, 1e-12);
    ASSERT_NEAR(abs(a.components - b.components) / std::sqrt(rho), 0.0, 1e-12);
  }
}

TEST(ReducedWavefunction, ThirdComponentIsMinusSecond) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 500; ++i) {
    const auto a = reduced_momentum_wavefunction(ScaledMomentum::d2(u(rng), u(rng)));
    EXPECT_NEAR(std::abs(a.components[2] + a.components[1]), 0.0, 1e-15);
  }
}

TEST(ReducedWavefunction, DensityEvenInEachComponent) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 500; ++i) {
    const double x = u(rng), y = u(rng);
    const double r = reduced_momentum_wavefunction(ScaledMomentum::d2(x, y)).density();
    EXPECT_NEAR(reduced_momentum_wavefunction(ScaledMomentum::d2(-x, y)).density(), r, 1e-14 * r);
    EXPECT_NEAR(reduced_momentum_wavefunction(ScaledMomentum::d2(x, -y)).density(), r, 1e-14 * r);
  }
}

TEST(ReducedWavefunction, ThreeDimensionsUnsupported) {
  EXPECT_THROW(reduced_momentum_wavefunction(ScaledMomentum::d3(0, 0, 1)), UnsupportedOperation);
}

TEST(FiniteWidthJointAmplitude, ReflectionConjugationSymmetry) {
  // (p, n) -> (-p, -n): entries (1,1) and (4,4) keep their value, the mixed
  // entries flip sign, all up to complex conjugation.
  const FieldConfig f(2.0, 1.0);
  const auto a = finite_width_joint_amplitude_1d(0.5, 0.3, f);
  const auto b = finite_width_joint_amplitude_1d(-0.5, -0.3, f);
  const double sign[4] = {1.0, -1.0, -1.0, 1.0};
  for (std::size_t i = 0; i < 4; ++i)
    EXPECT_NEAR(std::abs(b[i] - sign[i] * std::conj(a[i])), 0.0, 1e-16);
}

TEST(FiniteWidthJointAmplitude, FiniteAtOppositeMomenta) {
  const FieldConfig f(2.0, 1.0);
  const auto at = finite_width_joint_amplitude_1d(0.7, -0.7, f);
  const auto near = finite_width_joint_amplitude_1d(0.7 + 1e-8, -0.7, f);
  EXPECT_GT(abs(at), 0.0);
  EXPECT_NEAR(abs(near - at) / abs(at), 0.0, 1e-6);
}

TEST(FiniteWidthJointAmplitude, LargeTransferSuppression) {
  // The transform itself falls by more than 1e6 between qW = 1 and qW = 10.
  // The full amplitude also carries the spinor factor, which grows with q,
  // so it only follows that decay up to that factor.
  for (double w : {0.5, 1.0, 2.0}) {
    const FieldConfig f(2.0, w);
    const double ft_ratio =
        std::abs(sauter::potential_ft(10.0 / w, f)) / std::abs(sauter::potential_ft(1.0 / w, f));
    EXPECT_LT(ft_ratio, 1e-6);
    const double amp_ratio = abs(finite_width_joint_amplitude_1d(5.0 / w, 5.0 / w, f)) /
                             abs(finite_width_joint_amplitude_1d(0.5 / w, 0.5 / w, f));
    EXPECT_LT(amp_ratio, 1e-5);
  }
}

TEST(ConditionalAmplitude, ConvergesAndIsSmooth) {
  const FieldConfig f(2.0, 1.0);
  const auto a = conditional_amplitude_1d(0.4, f);
  const auto b = conditional_amplitude_1d(0.4 + 1e-6, f);
  EXPECT_TRUE(std::isfinite(abs(a)));
  EXPECT_GT(abs(a), 0.0);
  EXPECT_NEAR(abs(b - a) / abs(a), 0.0, 1e-4);
}

TEST(PairProbability, ZeroPotential) {
  const auto r = pair_probability(FieldConfig(0.0, 1.0), 1.0, 10.0);
  EXPECT_EQ(r.probability, 0.0);
}

TEST(PairProbability, QuadraticInTime) {
  const FieldConfig f(2.0, 1.0);
  const double cut = adapted_cutoff(f);
  const auto a = pair_probability(f, 1e-3, cut);
  const auto b = pair_probability(f, 2e-3, cut);
  EXPECT_DOUBLE_EQ(b.probability, 4.0 * a.probability);
  EXPECT_GT(a.probability, 0.0);
  EXPECT_EQ(a.cutoff, cut);
  EXPECT_GT(a.evaluations, 0u);
  EXPECT_LE(a.error_estimate, 1e-9 * a.integral);
}

TEST(PairProbability, CutoffDoublingFromAdaptedBaseline) {
  for (double w : {0.5, 1.0, 3.0}) {
    const FieldConfig f(2.0, w);
    const double cut = adapted_cutoff(f);
    const auto a = pair_probability(f, 1.0, cut);
    const auto b = pair_probability(f, 1.0, 2.0 * cut);
    EXPECT_LT(std::abs(b.probability - a.probability) / a.probability, 1e-6) << w;
  }
}

TEST(PairProbability, IncreasesWithCutoff) {
  const FieldConfig f(2.0, 1.0);
  double prev = 0.0;
  for (double cut : {0.5, 1.0, 2.0, 4.0}) {
    const double p = pair_probability(f, 1.0, cut).probability;
    EXPECT_GT(p, prev);
    prev = p;
  }
}

TEST(PairProbability, PreconditionsAndUnsupportedInputs) {
  EXPECT_THROW(pair_probability(FieldConfig(2.0, 1.0), 1.0, 0.0), ContractViolation);
  EXPECT_THROW(pair_probability(FieldConfig(2.0, 1.0), -1.0, 1.0), ContractViolation);
  EXPECT_THROW(pair_probability(FieldConfig::infinite_width(2.0), 1.0, 1.0), UnsupportedOperation);
  EXPECT_THROW(pair_probability(FieldConfig(2.0, 1.0, 2), 1.0, 1.0), UnsupportedOperation);
}

TEST(PairProbability, ReportsFailureWhenToleranceUnreachable) {
  quad::QuadratureSpec spec;
  spec.max_panels = 2;
  spec.rel_tol = 1e-15;
  spec.abs_tol = 1e-300;
  EXPECT_THROW(pair_probability(FieldConfig(2.0, 1.0), 1.0, 14.0, spec), QuadratureFailure);
}
