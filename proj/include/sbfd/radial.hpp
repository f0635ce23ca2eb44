// SPDX-License-Identifier: Apache-2.0

#ifndef SBFD_RADIAL_HPP
#define SBFD_RADIAL_HPP

#include <memory>
#include <vector>

#include "sbfd/assembly.hpp"

namespace sbfd
{

inline constexpr double kPivotRcondThreshold = 1e-13;

//
// One block row of the radially discretised system. The row couples the three
// consecutive radial unknowns first, first+1, first+2 (index -1 and n+1 are the
// ghost points):
//
//   left * u[first] + center * u[first+1] + right * u[first+2] = rhs
//
// Row -1 (inner ghost condition) couples -1, 0, 1; row i in 0..n couples i-1, i, i+1;
// row n+1 (loaded boundary condition) couples n-1, n, n+1.
//
struct BlockRow
{
  int first = 0;
  ComplexMatrix left;
  ComplexMatrix center;
  ComplexMatrix right;
};

// Central-difference rows of the frequency-domain radial ODE with the zero internal
// force condition at grid.start and the internal force condition at grid.end.
// Returns n+3 rows ordered -1, 0, ..., n+1. Damping scales E0, E1, E2 per grid point.
std::vector<BlockRow> build_rows(const CoefficientMatrices &C, const RadialGrid &grid,
                                 double omega, const DampingProfile &damping);

enum class RecoveryMode
{
  stored,  // keep the n recovery operators
  replay   // keep only the problem data and re-run the sweep on demand
};

struct RadialProblem
{
  CoefficientMatrices coefficients;
  RadialGrid grid;
  double omega = 0.0;
  DampingProfile damping;
  int sign = 1;
};

//
// Result of eliminating every interior radial unknown of a subdomain: the dynamic
// stiffness on the loaded boundary (sign already applied) and the operators of the
// backward sweep u_i = R_i u_{i+1}, i = 0..n-1.
//
struct RadialCondensation
{
  ComplexMatrix stiffness;
  std::vector<ComplexMatrix> recovery;
  RadialGrid grid;
  double omega = 0.0;
  int sign = 1;
  std::shared_ptr<const RadialProblem> replay;

  int size() const { return static_cast<int>(stiffness.rows()); }
  bool stores_recovery() const { return !recovery.empty(); }
};

// Gauss-Jordan elimination of both ghost couplings followed by the block Thomas
// forward sweep. Throws SingularPivot with the offending row index.
RadialCondensation condense(std::vector<BlockRow> rows, int sign);

// Builds the rows for one subdomain and condenses them.
RadialCondensation condense(const CoefficientMatrices &C, const RadialGrid &grid,
                            double omega, const DampingProfile &damping, int sign,
                            RecoveryMode mode = RecoveryMode::stored);

// Backward sweep from the solved boundary displacement. Returns u_0..u_n with
// u_n == boundary.
std::vector<ComplexVector> recover_interior(const RadialCondensation &c,
                                            const ComplexVector &boundary);

// Applies the row operations of `condense` to a right-hand side given per row
// (-1..n+1). Exposed so the zero-interior-load structure can be checked directly.
std::vector<ComplexVector> transform_right_hand_side(std::vector<BlockRow> rows,
                                                     std::vector<ComplexVector> rhs);

}  // namespace sbfd

#endif  // SBFD_RADIAL_HPP
