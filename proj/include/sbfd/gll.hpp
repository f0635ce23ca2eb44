// SPDX-License-Identifier: Apache-2.0

#ifndef SBFD_GLL_HPP
#define SBFD_GLL_HPP

#include <vector>

namespace sbfd
{

inline constexpr int kMaxDegree = 64;

struct LegendreValue
{
  double value;
  double derivative;
};

// P_n(eta) and P'_n(eta) by the three-term recurrence.
LegendreValue legendre(int n, double eta);

//
// Gauss-Lobatto-Legendre nodes and weights of a degree-n Lagrange basis on [-1, 1].
// Nodes are the endpoints plus the roots of P'_n, in increasing order.
//
struct ReferenceBasis
{
  int degree = 0;
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return degree + 1; }
};

// Throws std::invalid_argument for n outside [1, kMaxDegree] and sbfd::NonConvergence
// if the Newton iteration stalls.
ReferenceBasis gll_rule(int n);

// Shared, lazily built rule for degree n. Safe for concurrent callers.
const ReferenceBasis &gll_basis(int n);

struct ShapeValues
{
  std::vector<double> N;
  std::vector<double> dN;
};

// Lagrange shape functions over the basis nodes and their analytic derivatives.
ShapeValues shape_functions(const ReferenceBasis &basis, double eta);

struct QuadratureRule
{
  std::vector<double> points;
  std::vector<double> weights;
};

// Gauss-Legendre rule with `npoints` points on [-1, 1].
QuadratureRule gauss_legendre(int npoints);

}  // namespace sbfd

#endif  // SBFD_GLL_HPP
