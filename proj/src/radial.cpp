// SPDX-License-Identifier: Apache-2.0

#include "sbfd/radial.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "sbfd/errors.hpp"

namespace sbfd
{

namespace
{

using RowSource = std::function<BlockRow(int)>;

BlockRow make_row(const CoefficientMatrices &C, const RadialGrid &grid, double omega,
                  const DampingProfile &damping, int index)
{
  const int n = grid.steps;
  const double h = grid.step();
  BlockRow row;
  if (index == -1 || index == n + 1)
  {
    // Internal force xi E0 du/dxi + E1^T u, central difference about xi_0 or xi_n.
    const int at = index == -1 ? 0 : n;
    const double xi = grid.point(at);
    const Complex c = complex_modulus_factor(damping_at(damping, xi, grid.start, grid.end));
    const double a = xi / (2.0 * h);
    row.first = at - 1;
    row.left = (-a * c) * C.E0.cast<Complex>();
    row.center = c * C.E1.transpose().cast<Complex>();
    row.right = (a * c) * C.E0.cast<Complex>();
    return row;
  }
  const double xi = grid.point(index);
  const Complex c = complex_modulus_factor(damping_at(damping, xi, grid.start, grid.end));
  const double a = xi * xi / (h * h);
  const double b = xi / (2.0 * h);
  const RealMatrix G = C.E0 + C.E1.transpose() - C.E1;
  row.first = index - 1;
  row.left = c * (a * C.E0 - b * G).cast<Complex>();
  row.right = c * (a * C.E0 + b * G).cast<Complex>();
  row.center = (-2.0 * a * c) * C.E0.cast<Complex>() - c * C.E2.cast<Complex>() +
               Complex(xi * xi * omega * omega) * C.M0.cast<Complex>();
  return row;
}

Eigen::PartialPivLU<ComplexMatrix> factor(const ComplexMatrix &block, int index)
{
  Eigen::PartialPivLU<ComplexMatrix> lu(block);
  const double rcond = lu.rcond();
  if (!(rcond > kPivotRcondThreshold))
    throw SingularPivot(index, rcond);
  return lu;
}

//
// The elimination of condense(). Rows are requested in the order -1, 0, n, n+1, 1..n
// so callers can generate them on the fly; row n is requested twice.
//
RadialCondensation sweep(int n, const RowSource &row, int sign, bool store)
{
  RadialCondensation out;
  out.sign = sign;

  // Gauss-Jordan on the inner ghost row: removes u_{-1} from row 0.
  BlockRow current = row(0);
  {
    const BlockRow ghost = row(-1);
    const auto lu = factor(ghost.left, -1);
    current.center.noalias() -= current.left * lu.solve(ghost.center);
    current.right.noalias() -= current.left * lu.solve(ghost.right);
  }

  // Gauss-Jordan on the outer ghost row with the unswept row n: removes u_{n-1}.
  BlockRow outer = row(n + 1);
  {
    const BlockRow last = row(n);
    const auto lu = factor(last.left, n);
    outer.center.noalias() -= outer.left * lu.solve(last.center);
    outer.right.noalias() -= outer.left * lu.solve(last.right);
  }

  // Forward sweep. With chi_i = left_i center_{i-1}^{-1}:
  //   center_i -= chi_i right_{i-1}  ==  center_i += left_i R_{i-1}.
  if (store)
    out.recovery.reserve(n);
  for (int i = 1; i <= n; ++i)
  {
    const auto lu = factor(current.center, i - 1);
    ComplexMatrix recovery = -lu.solve(current.right);
    BlockRow next = row(i);
    next.center.noalias() += next.left * recovery;
    if (store)
      out.recovery.push_back(std::move(recovery));
    current = std::move(next);
  }

  // Decoupled pair: center_n u_n + right_n u_{n+1} = 0 and the outer row.
  const auto lu = factor(current.right, n);
  out.stiffness = double(sign) * (outer.center - outer.right * lu.solve(current.center));
  return out;
}

}  // namespace

std::vector<BlockRow> build_rows(const CoefficientMatrices &C, const RadialGrid &grid,
                                 double omega, const DampingProfile &damping)
{
  if (omega < 0.0)
    throw std::invalid_argument("angular frequency must be non-negative");
  if (grid.steps < 2)
    throw std::invalid_argument("radial grid needs at least 2 steps");
  std::vector<BlockRow> rows;
  rows.reserve(grid.steps + 3);
  for (int k = -1; k <= grid.steps + 1; ++k)
    rows.push_back(make_row(C, grid, omega, damping, k));
  return rows;
}

RadialCondensation condense(std::vector<BlockRow> rows, int sign)
{
  const int n = static_cast<int>(rows.size()) - 3;
  if (n < 2)
    throw std::invalid_argument("condense needs at least 5 block rows");
  auto out = sweep(n, [&rows](int k) { return rows[k + 1]; }, sign, true);
  out.grid.steps = n;
  return out;
}

RadialCondensation condense(const CoefficientMatrices &C, const RadialGrid &grid,
                            double omega, const DampingProfile &damping, int sign,
                            RecoveryMode mode)
{
  if (omega < 0.0)
    throw std::invalid_argument("angular frequency must be non-negative");
  if (grid.steps < 2)
    throw std::invalid_argument("radial grid needs at least 2 steps");
  auto out = sweep(
    grid.steps, [&](int k) { return make_row(C, grid, omega, damping, k); }, sign,
    mode == RecoveryMode::stored);
  out.grid = grid;
  out.omega = omega;
  if (mode == RecoveryMode::replay)
    out.replay = std::make_shared<const RadialProblem>(RadialProblem{C, grid, omega, damping, sign});
  return out;
}

std::vector<ComplexVector> recover_interior(const RadialCondensation &c,
                                            const ComplexVector &boundary)
{
  if (!c.stores_recovery())
  {
    if (!c.replay)
      throw std::logic_error("condensation holds neither recovery operators nor replay data");
    const auto &p = *c.replay;
    return recover_interior(
      condense(p.coefficients, p.grid, p.omega, p.damping, p.sign, RecoveryMode::stored),
      boundary);
  }
  // The backward sweep carries no right-hand side term: every row except the
  // loaded ghost row has zero load. Interior (body) loads would need the swept
  // right-hand side added here.
  const int n = static_cast<int>(c.recovery.size());
  std::vector<ComplexVector> u(n + 1);
  u[n] = boundary;
  for (int i = n - 1; i >= 0; --i)
    u[i].noalias() = c.recovery[i] * u[i + 1];
  return u;
}

std::vector<ComplexVector> transform_right_hand_side(std::vector<BlockRow> rows,
                                                     std::vector<ComplexVector> rhs)
{
  const int n = static_cast<int>(rows.size()) - 3;
  if (static_cast<int>(rhs.size()) != n + 3)
    throw std::invalid_argument("right-hand side needs one block per row");
  auto R = [&rows](int k) -> BlockRow & { return rows[k + 1]; };
  auto f = [&rhs](int k) -> ComplexVector & { return rhs[k + 1]; };

  {
    Eigen::PartialPivLU<ComplexMatrix> lu(R(-1).left);
    const ComplexMatrix chi = R(0).left * lu.inverse();
    R(0).center -= chi * R(-1).center;
    R(0).right -= chi * R(-1).right;
    f(0) -= chi * f(-1);
  }
  {
    Eigen::PartialPivLU<ComplexMatrix> lu(R(n).left);
    const ComplexMatrix chi = R(n + 1).left * lu.inverse();
    R(n + 1).center -= chi * R(n).center;
    R(n + 1).right -= chi * R(n).right;
    f(n + 1) -= chi * f(n);
  }
  for (int i = 1; i <= n; ++i)
  {
    Eigen::PartialPivLU<ComplexMatrix> lu(R(i - 1).center);
    const ComplexMatrix chi = R(i).left * lu.inverse();
    R(i).center -= chi * R(i - 1).right;
    f(i) -= chi * f(i - 1);
  }
  return rhs;
}

}  // namespace sbfd
