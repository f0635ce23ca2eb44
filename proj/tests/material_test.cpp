// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <gtest/gtest.h>

#include "sbfd/errors.hpp"
#include "sbfd/material.hpp"

using namespace sbfd;

TEST(Material, PlaneStrainLameForm)
{
  const Material m{1e10, 0.2, 2500.0, 0.05};
  const double lambda = m.young_modulus * m.poisson_ratio /
                        ((1.0 + m.poisson_ratio) * (1.0 - 2.0 * m.poisson_ratio));
  const double mu = m.shear_modulus();
  const auto D = elasticity_matrix(m);
  EXPECT_DOUBLE_EQ(D(0, 0), lambda + 2.0 * mu);
  EXPECT_DOUBLE_EQ(D(1, 1), lambda + 2.0 * mu);
  EXPECT_DOUBLE_EQ(D(0, 1), lambda);
  EXPECT_DOUBLE_EQ(D(1, 0), lambda);
  EXPECT_DOUBLE_EQ(D(2, 2), mu);
  EXPECT_EQ(D(0, 2), 0.0);
  EXPECT_EQ(D(1, 2), 0.0);
}

TEST(Material, WaveSpeedsOfVerificationRock)
{
  const auto c = wave_speeds({1e10, 0.2, 2500.0, 0.05});
  EXPECT_NEAR(c.pressure, std::sqrt(1e10 * 0.8 / (1.2 * 0.6) / 2500.0), 1e-9);
  EXPECT_NEAR(c.shear, std::sqrt(1e10 / 2.4 / 2500.0), 1e-9);
  EXPECT_NEAR(c.pressure, 2108.185, 1e-3);
  EXPECT_NEAR(c.shear, 1290.994, 1e-3);
}

TEST(Material, ValidationRejectsNonPhysicalValues)
{
  EXPECT_NO_THROW((Material{1e9, 0.0, 1.0, 0.0}).validate());
  EXPECT_THROW((Material{0.0, 0.2, 1.0, 0.0}).validate(), std::invalid_argument);
  EXPECT_THROW((Material{1e9, 0.5, 1.0, 0.0}).validate(), std::invalid_argument);
  EXPECT_THROW((Material{1e9, -0.1, 1.0, 0.0}).validate(), std::invalid_argument);
  EXPECT_THROW((Material{1e9, 0.2, 0.0, 0.0}).validate(), std::invalid_argument);
  EXPECT_THROW((Material{1e9, 0.2, 1.0, -0.01}).validate(), std::invalid_argument);
}

TEST(Material, HystereticFactor)
{
  EXPECT_EQ(complex_modulus_factor(0.05), Complex(1.0, 0.1));
  EXPECT_EQ(complex_modulus_factor(0.0), Complex(1.0, 0.0));
}

TEST(DampingProfile, LinearRampFromTruncationToOpenEnd)
{
  const auto p = DampingProfile::linear(1.0, 0.05);
  EXPECT_DOUBLE_EQ(damping_at(p, 2.0, 2.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(damping_at(p, 1.0, 2.0, 1.0), 0.05);
  EXPECT_NEAR(damping_at(p, 1.5, 2.0, 1.0), 0.525, 1e-15);
  EXPECT_DOUBLE_EQ(damping_at(DampingProfile::constant(0.05), 0.3, 1e-6, 1.0), 0.05);
}

TEST(DampingProfile, OutsideIntervalThrows)
{
  const auto p = DampingProfile::linear(1.0, 0.05);
  EXPECT_THROW(damping_at(p, 2.1, 2.0, 1.0), OutOfRange);
  EXPECT_THROW(damping_at(p, 0.9, 2.0, 1.0), OutOfRange);
  EXPECT_THROW(damping_at(DampingProfile::constant(0.1), 1.5, 0.0, 1.0), OutOfRange);
}
