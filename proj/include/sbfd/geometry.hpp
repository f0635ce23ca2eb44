// SPDX-License-Identifier: Apache-2.0

#ifndef SBFD_GEOMETRY_HPP
#define SBFD_GEOMETRY_HPP

#include <span>
#include <vector>

#include "sbfd/gll.hpp"
#include "sbfd/types.hpp"

namespace sbfd
{

//
// Isoparametric boundary element: n+1 nodes placed at the GLL positions of a degree-n
// Lagrange basis. Node order defines the eta direction.
//
struct BoundaryElement
{
  std::vector<int> node_ids;
  std::vector<Point> coords;

  int degree() const { return static_cast<int>(node_ids.size()) - 1; }
  const ReferenceBasis &basis() const { return gll_basis(degree()); }
};

// Straight element from `a` to `b` with generated node ids first_id, first_id+1, ...
// for the interior nodes and the given end ids.
BoundaryElement straight_element(int id_a, const Point &a, int id_b, const Point &b,
                                 int degree, int first_interior_id);

BoundaryElement reversed(const BoundaryElement &element);

// (x_p, y_p) and its eta derivative on the boundary.
Point boundary_point(const BoundaryElement &element, double eta);
Point boundary_tangent(const BoundaryElement &element, double eta);

// Scaled boundary transformation of geometry.
Point map_point(const Point &center, const BoundaryElement &element, double xi, double eta);

// Entries of the inverse boundary Jacobian and its determinant.
struct JacobianData
{
  double j11, j12, j21, j22;
  double det;
};

// Throws NonPositiveJacobian when |J| <= 0.
JacobianData jacobian(const Point &center, const BoundaryElement &element, double eta);

// B1 = b1 N and B2 = b2 N,eta at eta, each 3 x 2(n+1), plus the data they came from.
struct StrainBlocks
{
  Eigen::Matrix<double, 3, Eigen::Dynamic> B1;
  Eigen::Matrix<double, 3, Eigen::Dynamic> B2;
  std::vector<double> N;
  JacobianData jac;
};

StrainBlocks strain_blocks(const Point &center, const BoundaryElement &element, double eta);

// Angular-monotonicity screen for star-convexity: the polar angle of the boundary seen
// from `center`, sampled `samples_per_element` times per element, must never turn
// back along the chain.
bool star_convex(const Point &center, std::span<const BoundaryElement> elements,
                 int samples_per_element = 32);

// Area centroid of a closed element loop (boundary integral form).
Point loop_centroid(std::span<const BoundaryElement> elements);

}  // namespace sbfd

#endif  // SBFD_GEOMETRY_HPP
