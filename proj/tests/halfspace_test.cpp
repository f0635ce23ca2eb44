// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "sbfd/errors.hpp"
#include "sbfd/halfspace.hpp"
#include "support.hpp"

using namespace sbfd;

namespace
{

HalfspaceProblem problem(double frequency)
{
  return {test::rock(), test::kPressure, test::kHalfWidth, frequency};
}

double relative(Complex a, Complex b)
{
  return std::abs(a - b) / std::abs(b);
}

}  // namespace

TEST(Simpson38, ExactForCubics)
{
  auto cubic = [](double t) { return 2.0 * t * t * t - 3.0 * t * t + t - 5.0; };
  auto exact = [](double t) { return 0.5 * std::pow(t, 4) - std::pow(t, 3) + 0.5 * t * t - 5.0 * t; };
  for (int panels : {1, 2, 7})
    EXPECT_NEAR(simpson38(cubic, -1.3, 2.2, panels), exact(2.2) - exact(-1.3), 1e-12);
}

TEST(Simpson38, FourthOrderOnSmoothIntegrands)
{
  auto f = [](double t) { return std::exp(std::sin(t)); };
  // Reference from a very fine rule; the error ratio per halving approaches 16.
  const double ref = simpson38(f, 0.0, 3.0, 20000);
  const double e1 = std::abs(simpson38(f, 0.0, 3.0, 32) - ref);
  const double e2 = std::abs(simpson38(f, 0.0, 3.0, 64) - ref);
  EXPECT_NEAR(e1 / e2, 16.0, 0.5);
}

TEST(Simpson38, RejectsBadArguments)
{
  auto f = [](double t) { return t; };
  EXPECT_THROW(simpson38(f, 0.0, 1.0, 0), std::invalid_argument);
  EXPECT_THROW(simpson38(f, 1.0, 1.0, 3), std::invalid_argument);
}

TEST(HalfspaceIntegrand, FiniteAtOriginAndContinuous)
{
  const auto p = problem(15.0);
  const Complex at0 = halfspace_integrand(p, 4.0, 0.0);
  EXPECT_TRUE(std::isfinite(at0.real()) && std::isfinite(at0.imag()));
  EXPECT_LT(relative(halfspace_integrand(p, 4.0, 1e-7), at0), 1e-6);
}

TEST(HalfspaceIntegrand, EnvelopeDecaysLikeInverseSquare)
{
  // For large t the Rayleigh function tends to 2 t^2 (kp^2 - ks^2), so at x = 0
  // integrand / sin(b t) * t^2 settles to a constant.
  const auto p = problem(25.0);
  auto scaled = [&](double t) {
    return halfspace_integrand(p, 0.0, t) * t * t / std::sin(p.half_width * t);
  };
  EXPECT_LT(relative(scaled(400.3), scaled(800.7)), 1e-3);
}

TEST(HalfspacePrefactor, MatchesClosedForm)
{
  const auto p = problem(35.0);
  const double omega = 2.0 * std::numbers::pi * 35.0;
  const double cs = wave_speeds(p.material).shear;
  const Complex c(1.0, 0.1);
  const Complex expected =
    2.0 * omega * omega / (cs * cs) * 1e9 / (std::numbers::pi * p.material.shear_modulus() * c * c);
  EXPECT_LT(relative(halfspace_prefactor(p), expected), 1e-15);
}

TEST(SurfaceDisplacement, AgreesWithAdaptiveQuadrature)
{
  for (double f : {15.0, 25.0, 35.0})
    for (double x : {0.0, 7.5, 15.0, 30.0, 60.0, 96.0})
    {
      const auto p = problem(f);
      const Complex ref = test::reference_surface_displacement(p, x);
      EXPECT_LT(relative(surface_displacement(p, x).value, ref), 1e-7) << f << " Hz, x=" << x;
    }
}

TEST(SurfaceDisplacement, FrozenReferenceValues)
{
  // GSL adaptive quadrature (QAG plus QAWF tail) for the verification rock,
  // p0 = 1 GPa, b = 15 m.
  struct Row
  {
    double f, x;
    Complex v;
  };
  const Row rows[] = {
    {15.0, 0.0, {-9.288855840470e-01, 2.455889478315e+00}},
    {15.0, 15.0, {2.030159957968e-01, 1.434083032023e+00}},
    {15.0, 60.0, {-7.549459252824e-01, -8.664290085155e-02}},
    {25.0, 30.0, {-1.650026415951e-01, -3.755137935015e-01}},
    {35.0, 7.5, {-1.764893613644e-02, 8.770063493841e-01}},
    {35.0, 96.0, {-7.167207492718e-02, 2.830405103923e-02}},
  };
  for (const auto &r : rows)
    EXPECT_LT(relative(surface_displacement(problem(r.f), r.x).value, r.v), 1e-7)
      << r.f << " Hz, x=" << r.x;
}

TEST(SurfaceDisplacement, ConvergedUnderUpperLimitDoubling)
{
  for (double f : {15.0, 25.0, 35.0})
    for (double x : {0.0, 15.0, 60.0})
    {
      const auto p = problem(f);
      const auto r = surface_displacement(p, x);
      const Complex doubled = surface_displacement_to(p, x, 2.0 * r.upper_limit);
      EXPECT_LT(relative(r.value, doubled), 1e-6) << f << " Hz, x=" << x;
      EXPECT_LT(relative(surface_displacement_to(p, x, r.upper_limit), r.value), 1e-12);
    }
}

TEST(SurfaceDisplacement, EvenInX)
{
  const auto p = problem(25.0);
  for (double x : {3.0, 15.0, 41.0})
    EXPECT_EQ(surface_displacement(p, x).value, surface_displacement(p, -x).value);
}

TEST(SurfaceDisplacement, ValidatesInputs)
{
  auto p = problem(15.0);
  p.material.damping_ratio = 0.0;
  EXPECT_THROW(surface_displacement(p, 0.0), std::invalid_argument);
  p = problem(15.0);
  p.half_width = 0.0;
  EXPECT_THROW(surface_displacement(p, 0.0), std::invalid_argument);
  p = problem(15.0);
  OracleSettings strict;
  strict.tolerance = 1e-30;
  strict.max_doublings = 2;
  EXPECT_THROW(surface_displacement(p, 0.0, strict), NonConvergence);
  EXPECT_THROW(surface_displacement_to(p, 0.0, 0.5 * first_segment_limit(p)), std::invalid_argument);
}
