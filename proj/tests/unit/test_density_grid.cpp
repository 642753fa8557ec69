#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "paircorr/density_grid.hpp"
#include "paircorr/error.hpp"

using namespace paircorr;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

DensityGrid lorentzian_grid(double lo, double hi, int n) {
  auto xs = linspace(lo, hi, n);
  std::vector<double> ys;
  for (double x : xs) ys.push_back(1.0 / (1.0 + x * x));
  return DensityGrid({Axis{"xi", "lambda_e", xs}}, ys);
}

} // namespace

TEST(DensityGrid, RejectsInconsistentInput) {
  EXPECT_THROW(DensityGrid({}, {}), ConfigurationError);
  EXPECT_THROW(DensityGrid({Axis{"x", "", {}}}, {}), ConfigurationError);
  EXPECT_THROW(DensityGrid({Axis{"x", "", {0.0, 0.0}}}, {1.0, 1.0}), ConfigurationError);
  EXPECT_THROW(DensityGrid({Axis{"x", "", {0.0, 1.0}}}, {1.0}), ConfigurationError);
  EXPECT_THROW(DensityGrid({Axis{"x", "", {0.0, 1.0}}}, {1.0, -1e-3}), ContractViolation);
  EXPECT_THROW(DensityGrid({Axis{"x", "", {0.0, 1.0}}}, {1.0, NAN}), ContractViolation);
}

TEST(DensityGrid, TwoAxesAreRowMajor) {
  DensityGrid g({Axis{"x", "", {0, 1, 2}}, Axis{"y", "", {0, 1}}}, {0, 1, 2, 3, 4, 5});
  EXPECT_EQ(g.axes().size(), 2u);
  EXPECT_THROW(g.interpolate(0.5), UnsupportedOperation);
  EXPECT_THROW(extract_width(g), UnsupportedOperation);
}

TEST(DensityGrid, CubicInterpolationIsExactForCubics) {
  auto xs = linspace(-2, 3, 11);
  std::vector<double> ys;
  auto cubic = [](double x) { return 5.0 + x * x * x - 2.0 * x; };  // positive on range
  for (double x : xs) ys.push_back(cubic(x) + 10.0);
  DensityGrid g({Axis{"x", "", xs}}, ys);
  for (double x : {-1.93, -0.2, 0.77, 2.99, 3.0, -2.0})
    EXPECT_NEAR(g.interpolate(x), cubic(x) + 10.0, 1e-12) << x;
  EXPECT_THROW(g.interpolate(3.01), DomainError);
  EXPECT_THROW(g.interpolate(-2.5), DomainError);
}

TEST(DensityGrid, ShortGridsInterpolateLinearly) {
  DensityGrid g({Axis{"x", "", {0.0, 2.0}}}, {1.0, 3.0});
  EXPECT_DOUBLE_EQ(g.interpolate(0.5), 1.5);
}

TEST(DensityGrid, ScalingAtOriginAndReference) {
  auto g = lorentzian_grid(-4, 4, 161);
  EXPECT_EQ(g.scaling().kind, ScalingKind::raw);
  g.apply_scaling(Scaling::origin());
  EXPECT_DOUBLE_EQ(g.scaling().factor, 1.0);
  g.apply_scaling(Scaling::at(1.0));
  EXPECT_NEAR(g.scaling().factor, 2.0, 1e-6);
  EXPECT_EQ(g.scaling().reference, 1.0);
  const auto s = g.scaled_values();
  for (std::size_t i = 0; i < s.size(); ++i)
    EXPECT_DOUBLE_EQ(s[i], g.values()[i] * g.scaling().factor);
  EXPECT_THROW(g.apply_scaling(Scaling::at(10.0)), DomainError);
  g.apply_scaling(Scaling::raw());
  EXPECT_EQ(g.scaling().factor, 1.0);
}

TEST(DensityGrid, ScalingRefusesZeroValue) {
  DensityGrid g({Axis{"x", "", {0.0, 1.0}}}, {0.0, 1.0});
  EXPECT_THROW(g.apply_scaling(Scaling::origin()), DomainError);
}

TEST(ExtractWidth, HalfMaximumOfLorentzian) {
  auto g = lorentzian_grid(0, 5, 501);
  const auto w = extract_width(g);
  EXPECT_NEAR(w.value, 1.0, 1e-7);
  EXPECT_LE(w.bracket_lo, 1.0);
  EXPECT_GE(w.bracket_hi, 1.0);
  EXPECT_EQ(w.reference, 0.0);
}

TEST(ExtractWidth, FractionRelativeToReference) {
  auto g = lorentzian_grid(0, 20, 2001);
  g.apply_scaling(Scaling::at(1.0));
  // level = 0.1 * 1/2 -> 1 + x^2 = 20
  const auto w = extract_width(g, WidthMetric::at_fraction(0.1));
  EXPECT_EQ(w.reference, 1.0);
  EXPECT_NEAR(w.value, std::sqrt(19.0), 1e-6);
}

TEST(ExtractWidth, FailsWhenLevelNotReached) {
  auto g = lorentzian_grid(0, 0.5, 11);
  try {
    extract_width(g);
    FAIL() << "expected WidthNotBracketed";
  } catch (const WidthNotBracketed &e) {
    EXPECT_EQ(e.grid_lo(), 0.0);
    EXPECT_EQ(e.grid_hi(), 0.5);
  }
  EXPECT_THROW(extract_width(g, WidthMetric::at_fraction(0.0)), ContractViolation);
  EXPECT_THROW(extract_width(g, WidthMetric::at_fraction(1.0)), ContractViolation);
}
