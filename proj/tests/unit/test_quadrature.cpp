#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "paircorr/error.hpp"
#include "paircorr/lattice_fft.hpp"
#include "paircorr/quadrature.hpp"
#include "paircorr/spectra.hpp"

using namespace paircorr;
using namespace paircorr::quad;
using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;

TEST(QuadratureSpecType, Validation) {
  QuadratureSpec s;
  EXPECT_NO_THROW(s.validate());
  s.abs_tol = 0.0;
  EXPECT_THROW(s.validate(), ConfigurationError);
  s = {};
  s.max_depth = 0;
  EXPECT_THROW(s.validate(), ConfigurationError);
}

TEST(IntegrateAdaptive, PolynomialExactness) {
  const auto r = integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 1.0 / 3.0, 1e-12);
  EXPECT_LE(r.error_estimate, 1e-12);
}

TEST(IntegrateAdaptive, OddFunctionOnSymmetricInterval) {
  QuadratureSpec s;
  const auto r = integrate_adaptive([](double x) { return x * std::exp(-x * x) * std::cos(x); },
                                    -3.0, 3.0, s);
  EXPECT_NEAR(r.value, 0.0, s.abs_tol);
}

TEST(IntegrateAdaptive, MappedInfiniteDomainGivesLongitudinalMarginal) {
  const auto f = [](double py) { return spectra::joint_spectrum_2d(ScaledMomentum::d2(0.0, py)); };
  const auto half = integrate_adaptive(f, 0.0, INFINITY);
  ASSERT_TRUE(half.converged);
  EXPECT_NEAR(2.0 * half.value / spectra::marginal_longitudinal_2d(0.0), 1.0, 1e-10);
  const auto full = integrate_adaptive(f, -INFINITY, INFINITY);
  EXPECT_NEAR(full.value / (4.0 * kPi), 1.0, 1e-10);
}

TEST(IntegrateAdaptive, ReversedBoundsFlipSign) {
  const auto a = integrate_adaptive([](double x) { return std::exp(x); }, 0.0, 1.0);
  const auto b = integrate_adaptive([](double x) { return std::exp(x); }, 1.0, 0.0);
  EXPECT_DOUBLE_EQ(a.value, -b.value);
}

TEST(IntegrateAdaptive, ComplexIntegrand) {
  const auto r = integrate_adaptive([](double x) { return std::exp(cplx(0.0, x)); }, 0.0, kPi);
  EXPECT_NEAR(std::abs(r.value - cplx(0.0, 2.0)), 0.0, 1e-12);
}

TEST(IntegrateAdaptive, ExhaustedBudgetReportsNotConverged) {
  QuadratureSpec s;
  s.max_depth = 2;
  s.max_panels = 3;
  const auto r = integrate_adaptive([](double x) { return std::sin(200.0 * x) * x; }, 0.0, 10.0, s);
  EXPECT_FALSE(r.converged);
  EXPECT_FALSE(r.diagnostic.empty());
  EXPECT_THROW(r.require("test"), QuadratureFailure);
}

TEST(IntegrateAdaptive, DeterministicOutput) {
  auto f = [](double x) { return std::exp(-x) * std::sin(5.0 * x) * std::sin(5.0 * x); };
  const auto a = integrate_adaptive(f, 0.0, INFINITY);
  const auto b = integrate_adaptive(f, 0.0, INFINITY);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.evaluations, b.evaluations);
}

// A converged result honours its contract when re-integrated at double
// resolution: the tighter answer lies within the first one's error bar.
TEST(IntegrateAdaptive, ErrorEstimateIsHonest) {
  auto f = [](double x) { return 1.0 / (1.0 + 25.0 * x * x) + std::sqrt(std::abs(x)); };
  QuadratureSpec coarse;
  coarse.rel_tol = 1e-6;
  coarse.abs_tol = 1e-9;
  QuadratureSpec fine;
  fine.rel_tol = 1e-13;
  fine.abs_tol = 1e-15;
  const auto a = integrate_adaptive(f, -1.0, 1.0, coarse);
  const auto b = integrate_adaptive(f, -1.0, 1.0, fine);
  ASSERT_TRUE(a.converged);
  EXPECT_LE(std::abs(a.value - b.value), std::max(a.error_estimate, 1e-15));
  EXPECT_LE(a.error_estimate, coarse.target(std::abs(a.value)));
}

TEST(IntegrateWithTail, PowerLawTailRecoversMarginal) {
  QuadratureSpec s;
  s.tail_model = TailModel::power_law;
  s.rel_tol = 1e-12;
  s.abs_tol = 1e-14;
  for (double px : {0.0, 1.0, 4.0}) {
    auto f = [px](double py) { return spectra::joint_spectrum_2d(ScaledMomentum::d2(px, py)); };
    const auto r = integrate_with_tail(f, 0.0, 1e5, s);
    EXPECT_TRUE(r.converged) << r.diagnostic;
    EXPECT_NEAR(2.0 * r.value / spectra::marginal_longitudinal_2d(px), 1.0, 1e-9) << px;
  }
}

TEST(IntegrateWithTail, ExponentialTail) {
  QuadratureSpec s;
  s.tail_model = TailModel::exponential;
  const auto r = integrate_with_tail([](double x) { return std::exp(-2.0 * x); }, 0.0, 5.0, s);
  EXPECT_NEAR(r.value, 0.5, 1e-10);
}

TEST(OscillatoryFT, ExponentialKernel) {
  const auto r = oscillatory_ft([](double x) { return std::exp(-std::abs(x)); }, 1.0);
  ASSERT_TRUE(r.converged);
  EXPECT_NEAR(r.value.real(), 1.0, 1e-9);
  EXPECT_NEAR(r.value.imag(), 0.0, 1e-9);
}

TEST(OscillatoryFT, EvenRealFunctionGivesRealTransform) {
  const auto r = oscillatory_ft([](double x) { return 1.0 / (1.0 + x * x); }, 2.0);
  ASSERT_TRUE(r.converged);
  EXPECT_NEAR(r.value.imag(), 0.0, 1e-12);
  EXPECT_NEAR(r.value.real(), kPi * std::exp(-2.0), 1e-8);
}

TEST(OscillatoryFT, AlgebraicTailIsExtrapolated) {
  // int_0^inf sin(x)/x dx = pi/2 decays only like 1/x.
  const auto r = oscillatory_half_line([](double x) { return x == 0.0 ? 1.0 : 1.0 / x; }, 1.0, 1e-300);
  ASSERT_TRUE(r.converged);
  EXPECT_NEAR(-r.value.imag(), kPi / 2.0, 1e-8);
}

TEST(OscillatoryFT, NonDecayingIntegrandFailsWithDiagnostic) {
  const auto r = oscillatory_half_line([](double) { return 1.0; }, 1.0, 0.0);
  EXPECT_FALSE(r.converged);
  EXPECT_NE(r.diagnostic.find("decay"), std::string::npos);
}

TEST(Bisect, FindsRoot) {
  const auto b = bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-14);
  EXPECT_NEAR(b.root(), std::sqrt(2.0), 1e-13);
  EXPECT_LE(b.lo, std::sqrt(2.0));
  EXPECT_GE(b.hi, std::sqrt(2.0));
}

TEST(WynnEpsilon, AcceleratesAlternatingSeries) {
  // partial sums of ln 2 = 1 - 1/2 + 1/3 - ...
  std::vector<double> sums;
  double s = 0.0;
  for (int k = 1; k <= 15; ++k) {
    s += (k % 2 ? 1.0 : -1.0) / k;
    sums.push_back(s);
  }
  const auto [value, gap] = detail::wynn_epsilon(sums);
  EXPECT_NEAR(value, std::log(2.0), 1e-10);
  EXPECT_LT(gap, 1e-8);
}

TEST(LatticeFFT, RoundTripIdentity) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> g;
  std::vector<cplx> x(256);
  for (auto &v : x) v = {g(rng), g(rng)};
  const auto f = lattice_fft(x, 0.3);
  EXPECT_EQ(f.length, 256u);
  EXPECT_NEAR(f.spacing, 2.0 * kPi / (256 * 0.3), 1e-15);
  const auto back = lattice_fft(f.values, f.spacing, FftDirection::inverse);
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(std::abs(back.values[i] - x[i]), 0.0, 1e-12);
}

TEST(LatticeFFT, ParsevalOnRandomData) {
  std::mt19937_64 rng(43);
  std::normal_distribution<double> g;
  std::vector<cplx> x(64 * 32);
  for (auto &v : x) v = {g(rng), g(rng)};
  double before = 0.0, after = 0.0, after2d = 0.0;
  for (const auto &v : x) before += std::norm(v);
  for (const auto &v : lattice_fft(x, 1.0).values) after += std::norm(v);
  for (const auto &v : lattice_fft_2d(x, 64, 32, 1.0).values) after2d += std::norm(v);
  EXPECT_NEAR(after / before, 1.0, 1e-13);
  EXPECT_NEAR(after2d / before, 1.0, 1e-13);
}

TEST(LatticeFFT, GaussianMapsToGaussianOfInverseWidth) {
  // exp(-x^2/2) on a centred lattice transforms to exp(-k^2/2) (sigma = 1).
  const std::size_t n = 256;
  const double dx = 0.1;
  std::vector<cplx> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double xj = (static_cast<double>(j) - n / 2.0) * dx;
    // (-1)^j shifts the centre to index n/2 in both spaces
    x[j] = std::exp(-xj * xj / 2.0) * ((j & 1) ? -1.0 : 1.0);
  }
  const auto f = lattice_fft(x, dx);
  const double scale = dx * std::sqrt(static_cast<double>(n)) / std::sqrt(2.0 * kPi);
  for (std::size_t k = n / 2 - 30; k <= n / 2 + 30; ++k) {
    const double kk = (static_cast<double>(k) - n / 2.0) * f.spacing;
    const double sign = (k & 1) ? -1.0 : 1.0;
    const cplx got = f.values[k] * scale * sign * ((n / 2) % 2 ? -1.0 : 1.0);
    EXPECT_NEAR(got.real(), std::exp(-kk * kk / 2.0), 1e-12) << k;
    EXPECT_NEAR(got.imag(), 0.0, 1e-12);
  }
}

TEST(LatticeFFT, RejectsBadLengthOrSpacing) {
  std::vector<cplx> x(12);
  EXPECT_THROW(lattice_fft(x, 1.0), ConfigurationError);
  std::vector<cplx> y(16);
  EXPECT_THROW(lattice_fft(y, 0.0), ConfigurationError);
  EXPECT_THROW(lattice_fft_2d(y, 4, 3, 1.0), ConfigurationError);
}

TEST(LatticeFFT, PowerOfTwoHelpers) {
  EXPECT_TRUE(is_power_of_two(1));
  EXPECT_TRUE(is_power_of_two(1024));
  EXPECT_FALSE(is_power_of_two(0));
  EXPECT_FALSE(is_power_of_two(96));
  EXPECT_EQ(next_power_of_two(97), 128u);
  EXPECT_EQ(next_power_of_two(128), 128u);
}
