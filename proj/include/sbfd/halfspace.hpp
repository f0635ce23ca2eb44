// SPDX-License-Identifier: Apache-2.0

#ifndef SBFD_HALFSPACE_HPP
#define SBFD_HALFSPACE_HPP

#include <stdexcept>

#include "sbfd/material.hpp"

namespace sbfd
{

//
// Composite Simpson 3/8 rule on [lower, upper] with `panels` panels of three
// intervals each (3 panels + 1 samples).
//
template <class F>
auto simpson38(F &&f, double lower, double upper, int panels) -> decltype(f(lower))
{
  if (panels < 1)
    throw std::invalid_argument("simpson38 needs at least one panel");
  if (!(upper > lower))
    throw std::invalid_argument("simpson38 needs upper > lower");
  const int samples = 3 * panels;
  const double h = (upper - lower) / samples;
  auto sum = f(lower) + f(upper);
  for (int k = 1; k < samples; ++k)
    sum += (k % 3 == 0 ? 2.0 : 3.0) * f(lower + k * h);
  return sum * (3.0 * h / 8.0);
}

// Viscoelastic half-space under a uniform harmonic strip pressure p0 on |x| <= b.
struct HalfspaceProblem
{
  Material material;
  double pressure = 0.0;
  double half_width = 0.0;
  double frequency = 0.0;

  // Throws std::invalid_argument unless every parameter is positive (zeta included).
  void validate() const;
};

struct OracleSettings
{
  double tolerance = 1e-8;      // relative change accepted for one upper-limit doubling
  int panels = 4096;            // minimum panels per integration segment
  double samples_per_period = 24.0;  // resolution of the cos(x t) sin(b t) oscillation
  int max_doublings = 40;
};

// Integrand of the surface displacement integral in the wavenumber t (1/m), without
// the constant prefactor. Finite at t = 0.
Complex halfspace_integrand(const HalfspaceProblem &p, double x, double t);

// Constant in front of the integral: 2 k_s^2 p0 / (pi mu (1 + 2 i zeta)^2), k_s = omega / c_s.
Complex halfspace_prefactor(const HalfspaceProblem &p);

struct OracleResult
{
  Complex value;
  double upper_limit = 0.0;
  int doublings = 0;
};

//
// Vertical surface displacement (positive up, compressive load pushing down) at
// abscissa x. The integral is taken over [0, T0] and then over doubling segments
// [T, 2T] until one segment changes the value by less than `tolerance` relative.
// Throws NonConvergence when max_doublings is exhausted.
//
OracleResult surface_displacement(const HalfspaceProblem &p, double x,
                                  const OracleSettings &settings = {});

// Same segmentation, integrated up to a fixed limit (a power-of-two multiple of T0).
Complex surface_displacement_to(const HalfspaceProblem &p, double x, double upper_limit,
                                const OracleSettings &settings = {});

// Length of the first segment: four times the shear wavenumber, at least 20 / b.
double first_segment_limit(const HalfspaceProblem &p);

}  // namespace sbfd

#endif  // SBFD_HALFSPACE_HPP
