// SPDX-License-Identifier: Apache-2.0

#include "sbfd/halfspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sbfd/errors.hpp"

namespace sbfd
{

void HalfspaceProblem::validate() const
{
  material.validate();
  if (!(material.damping_ratio > 0.0))
    throw std::invalid_argument("the half-space solution needs a positive damping ratio");
  if (!(pressure > 0.0) || !(half_width > 0.0) || !(frequency > 0.0))
    throw std::invalid_argument("strip pressure, half-width and frequency must be positive");
}

namespace
{

Complex principal_root(Complex z)
{
  const Complex r = std::sqrt(z);
  return r.real() < 0.0 ? -r : r;
}

struct Wavenumbers
{
  Complex kp2;  // omega^2 / (c_p^2 (1 + 2 i zeta))
  Complex ks2;
};

Wavenumbers wavenumbers(const HalfspaceProblem &p)
{
  const auto c = wave_speeds(p.material);
  const double omega = 2.0 * std::numbers::pi * p.frequency;
  const Complex f = complex_modulus_factor(p.material.damping_ratio);
  return {omega * omega / (c.pressure * c.pressure) / f, omega * omega / (c.shear * c.shear) / f};
}

double oscillation_rate(const HalfspaceProblem &p, double x)
{
  return std::abs(x) + p.half_width;
}

int panels_for(const HalfspaceProblem &p, double x, double length, const OracleSettings &s)
{
  const double periods = oscillation_rate(p, x) * length / (2.0 * std::numbers::pi);
  return std::max(s.panels, static_cast<int>(std::ceil(s.samples_per_period * periods / 3.0)));
}

}  // namespace

Complex halfspace_integrand(const HalfspaceProblem &p, double x, double t)
{
  const auto k = wavenumbers(p);
  const double t2 = t * t;
  const Complex alpha = principal_root(t2 - k.kp2);
  const Complex beta = principal_root(t2 - k.ks2);
  const Complex q = t2 + beta * beta;
  // sin(b t) / t, continued to b at t = 0.
  const double sinc = t == 0.0 ? p.half_width : std::sin(p.half_width * t) / t;
  return alpha * sinc * std::cos(x * t) / (q * q - 4.0 * t2 * alpha * beta);
}

Complex halfspace_prefactor(const HalfspaceProblem &p)
{
  const auto c = wave_speeds(p.material);
  const double omega = 2.0 * std::numbers::pi * p.frequency;
  const double ks2 = omega * omega / (c.shear * c.shear);
  const Complex f = complex_modulus_factor(p.material.damping_ratio);
  return 2.0 * ks2 * p.pressure / (std::numbers::pi * p.material.shear_modulus() * f * f);
}

double first_segment_limit(const HalfspaceProblem &p)
{
  const auto c = wave_speeds(p.material);
  const double ks = 2.0 * std::numbers::pi * p.frequency / c.shear;
  return std::max(4.0 * ks, 20.0 / p.half_width);
}

OracleResult surface_displacement(const HalfspaceProblem &p, double x,
                                  const OracleSettings &settings)
{
  p.validate();
  auto f = [&p, x](double t) { return halfspace_integrand(p, x, t); };
  double upper = first_segment_limit(p);
  Complex sum = simpson38(f, 0.0, upper, panels_for(p, x, upper, settings));
  for (int d = 1; d <= settings.max_doublings; ++d)
  {
    const Complex piece = simpson38(f, upper, 2.0 * upper, panels_for(p, x, upper, settings));
    sum += piece;
    upper *= 2.0;
    if (std::abs(piece) <= settings.tolerance * std::abs(sum))
      return {halfspace_prefactor(p) * sum, upper, d};
  }
  throw NonConvergence("half-space integral at x = " + std::to_string(x) +
                       " did not settle within " + std::to_string(settings.max_doublings) +
                       " upper-limit doublings");
}

Complex surface_displacement_to(const HalfspaceProblem &p, double x, double upper_limit,
                                const OracleSettings &settings)
{
  p.validate();
  auto f = [&p, x](double t) { return halfspace_integrand(p, x, t); };
  double upper = first_segment_limit(p);
  if (!(upper_limit >= upper))
    throw std::invalid_argument("upper limit below the first integration segment");
  Complex sum = simpson38(f, 0.0, upper, panels_for(p, x, upper, settings));
  while (upper < upper_limit * (1.0 - 1e-12))
  {
    const double next = std::min(2.0 * upper, upper_limit);
    sum += simpson38(f, upper, next, panels_for(p, x, next - upper, settings));
    upper = next;
  }
  return halfspace_prefactor(p) * sum;
}

}  // namespace sbfd
