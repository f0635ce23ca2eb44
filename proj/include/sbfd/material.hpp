// SPDX-License-Identifier: Apache-2.0

#ifndef SBFD_MATERIAL_HPP
#define SBFD_MATERIAL_HPP

#include <Eigen/Dense>

#include "sbfd/types.hpp"

namespace sbfd
{

// Isotropic linear (visco)elastic solid. SI units.
struct Material
{
  double young_modulus = 0.0;
  double poisson_ratio = 0.0;
  double density = 0.0;
  double damping_ratio = 0.0;

  // Throws std::invalid_argument when the invariants do not hold.
  void validate() const;
  double shear_modulus() const { return young_modulus / (2.0 * (1.0 + poisson_ratio)); }
};

// Plane-strain constitutive matrix in Voigt order (xx, yy, xy).
Eigen::Matrix3d elasticity_matrix(const Material &m);

// Hysteretic damping enters as D -> (1 + 2 i zeta) D.
Complex complex_modulus_factor(double zeta);

struct WaveSpeeds
{
  double pressure;
  double shear;
};

WaveSpeeds wave_speeds(const Material &m);

//
// Damping ratio along the radial coordinate. `start` is the value at the zero-traction
// end of the radial grid (truncation point of an unbounded subdomain), `end` the value
// at the open end that touches the rest of the mesh.
//
struct DampingProfile
{
  enum class Kind
  {
    constant,
    linear
  };

  Kind kind = Kind::constant;
  double start = 0.0;
  double end = 0.0;

  static DampingProfile constant(double zeta) { return {Kind::constant, zeta, zeta}; }
  static DampingProfile linear(double zeta_start, double zeta_end)
  {
    return {Kind::linear, zeta_start, zeta_end};
  }
};

// Throws OutOfRange when xi lies outside [xi_start, xi_open] (either orientation).
double damping_at(const DampingProfile &profile, double xi, double xi_start, double xi_open);

}  // namespace sbfd

#endif  // SBFD_MATERIAL_HPP
