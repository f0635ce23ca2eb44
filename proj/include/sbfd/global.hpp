// SPDX-License-Identifier: Apache-2.0

#ifndef SBFD_GLOBAL_HPP
#define SBFD_GLOBAL_HPP

#include <span>
#include <vector>

#include "sbfd/radial.hpp"
#include "sbfd/subdomain.hpp"

namespace sbfd
{

//
// Global complex system S_g u = f over the boundary nodes of all subdomains. Global
// dofs are interleaved (x, y) per node in ascending node id. Constrained dofs stay in
// the numbering; solve() removes them and returns zero there.
//
struct GlobalSystem
{
  ComplexMatrix stiffness;
  ComplexVector load;
  double omega = 0.0;
  std::vector<int> node_ids;
  std::vector<Point> node_coords;
  std::vector<std::vector<int>> scatter;  // per subdomain: local dof -> global dof
  std::vector<int> constrained;           // ascending global dofs fixed at zero

  int size() const { return static_cast<int>(stiffness.rows()); }
  int node_count() const { return static_cast<int>(node_ids.size()); }
  // Throws std::out_of_range for unknown nodes.
  int dof(int node_id, int component) const;
  std::vector<int> free_dofs() const;
};

// Scatter-adds the sign-adjusted stiffness of every subdomain. `condensations[k]`
// belongs to `subdomains[k]`. Throws InconsistentFrequency when the condensations
// disagree on omega and UnmatchedInterfaceNodes when a shared node id carries
// different coordinates or a condensation does not match its subdomain's dofs.
GlobalSystem assemble_global(std::span<const Subdomain> subdomains,
                             std::span<const RadialCondensation> condensations);

//
// Uniform vertical pressure p0 over |x| <= b on the free surface y = 0. The traction
// is (0, -p0), so a positive pressure pushes down.
//
struct LoadCase
{
  double pressure = 0.0;
  double half_width = 0.0;
  std::vector<BoundaryElement> elements;
  double omega = 0.0;
};

// Consistent nodal forces integrated on the covered part of each loaded element
// only. Throws LoadOutsideMesh when a loaded element leaves y = 0, references a node
// outside the system, or the loaded elements do not cover the strip. On a half model
// the loaded elements cover [0, b] or [-b, 0].
ComplexVector strip_load_vector(const GlobalSystem &system, const LoadCase &load);

// Fixes u_x at every node with |x - plane_x| < tolerance.
GlobalSystem apply_symmetry_constraints(GlobalSystem system, double plane_x,
                                        double tolerance = 1e-9);

inline constexpr double kMaxSolveResidual = 1e-10;

// Dense LU of the free block. Returns the full-length solution (zeros at constrained
// dofs). Throws SingularGlobalMatrix when the factorisation is singular or the
// relative residual exceeds kMaxSolveResidual.
ComplexVector solve(const GlobalSystem &system);

// Local boundary displacement of subdomain k.
ComplexVector gather(const GlobalSystem &system, int subdomain, const ComplexVector &u);

}  // namespace sbfd

#endif  // SBFD_GLOBAL_HPP
