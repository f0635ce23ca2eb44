// SPDX-License-Identifier: Apache-2.0

#ifndef SBFD_ASSEMBLY_HPP
#define SBFD_ASSEMBLY_HPP

#include "sbfd/subdomain.hpp"

namespace sbfd
{

inline constexpr double kMaxE0Condition = 1e14;

//
// Coefficient matrices of the radial ODE of one subdomain, in the subdomain's local
// dof numbering. E0, E1, E2 use the elastic D; damping is applied later as a scalar.
//
struct CoefficientMatrices
{
  RealMatrix E0;
  RealMatrix E1;
  RealMatrix E2;
  RealMatrix M0;

  int size() const { return static_cast<int>(E0.rows()); }
};

// Gauss-Legendre quadrature over every element; `quadrature_points` <= 0 selects
// degree + 2 points per element. Throws NonPositiveJacobian or SingularE0.
CoefficientMatrices assemble_coefficients(const Subdomain &s, int quadrature_points = 0);

// As above with an explicit dof map.
CoefficientMatrices assemble_coefficients(const Subdomain &s, const DofMap &dofs,
                                          int quadrature_points = 0);

//
// Holds the given local dofs at zero along every radial line. Their rows and columns
// are decoupled from the rest; a unit-scaled E0 diagonal keeps the blocks regular and
// turns each into the trivial radial equation whose only bounded solution is its
// boundary value, which the global constraint then fixes at zero.
//
void fix_radial_dofs(CoefficientMatrices &C, const std::vector<int> &local_dofs);

}  // namespace sbfd

#endif  // SBFD_ASSEMBLY_HPP
