// SPDX-License-Identifier: Apache-2.0

#include "sbfd/material.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sbfd/errors.hpp"

namespace sbfd
{

void Material::validate() const
{
  if (!(young_modulus > 0.0))
    throw std::invalid_argument("Young's modulus must be positive");
  if (!(poisson_ratio >= 0.0 && poisson_ratio < 0.5))
    throw std::invalid_argument("Poisson's ratio must lie in [0, 0.5)");
  if (!(density > 0.0))
    throw std::invalid_argument("density must be positive");
  if (!(damping_ratio >= 0.0))
    throw std::invalid_argument("damping ratio must be non-negative");
}

Eigen::Matrix3d elasticity_matrix(const Material &m)
{
  const double nu = m.poisson_ratio;
  const double scale = m.young_modulus / ((1.0 + nu) * (1.0 - 2.0 * nu));
  Eigen::Matrix3d D;
  D << scale * (1.0 - nu), scale * nu, 0.0,
       scale * nu, scale * (1.0 - nu), 0.0,
       0.0, 0.0, scale * (1.0 - 2.0 * nu) / 2.0;
  return D;
}

Complex complex_modulus_factor(double zeta)
{
  return {1.0, 2.0 * zeta};
}

WaveSpeeds wave_speeds(const Material &m)
{
  const auto D = elasticity_matrix(m);
  return {std::sqrt(D(0, 0) / m.density), std::sqrt(D(2, 2) / m.density)};
}

double damping_at(const DampingProfile &profile, double xi, double xi_start, double xi_open)
{
  const double lo = std::min(xi_start, xi_open);
  const double hi = std::max(xi_start, xi_open);
  const double slack = 1e-12 * std::max(1.0, hi);
  if (xi < lo - slack || xi > hi + slack)
    throw OutOfRange("xi = " + std::to_string(xi) + " outside the radial interval [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  if (profile.kind == DampingProfile::Kind::constant)
    return profile.start;
  if (xi == xi_open)
    return profile.end;
  const double t = (xi - xi_start) / (xi_open - xi_start);
  return profile.start + t * (profile.end - profile.start);
}

}  // namespace sbfd
