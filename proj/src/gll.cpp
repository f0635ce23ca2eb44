// SPDX-License-Identifier: Apache-2.0

#include "sbfd/gll.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sbfd/errors.hpp"

namespace sbfd
{

namespace
{

constexpr double kNewtonTolerance = 1e-15;
constexpr int kNewtonMaxIterations = 100;

// P_n, P'_n and P''_n, the last from the Legendre ODE. Only valid strictly inside
// (-1, 1), which is all the interior-root Newton iteration needs.
std::array<double, 3> legendre_with_second(int n, double eta)
{
  const auto [p, dp] = legendre(n, eta);
  const double d2p = (2.0 * eta * dp - n * (n + 1.0) * p) / (1.0 - eta * eta);
  return {p, dp, d2p};
}

}  // namespace

LegendreValue legendre(int n, double eta)
{
  if (n == 0)
    return {1.0, 0.0};
  double p_prev = 1.0;
  double p = eta;
  double dp_prev = 0.0;
  double dp = 1.0;
  for (int k = 2; k <= n; ++k)
  {
    const double p_next = ((2.0 * k - 1.0) * eta * p - (k - 1.0) * p_prev) / k;
    // d/deta of the recurrence
    const double dp_next = dp_prev + (2.0 * k - 1.0) * p;
    p_prev = p;
    p = p_next;
    dp_prev = dp;
    dp = dp_next;
  }
  return {p, dp};
}

ReferenceBasis gll_rule(int n)
{
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("GLL degree must lie in [1, " + std::to_string(kMaxDegree) +
                                "], got " + std::to_string(n));
  ReferenceBasis basis;
  basis.degree = n;
  basis.nodes.assign(n + 1, 0.0);
  basis.weights.assign(n + 1, 0.0);
  basis.nodes[0] = -1.0;
  basis.nodes[n] = 1.0;

  // Interior roots of P'_n, seeded with Chebyshev-Gauss-Lobatto points. Only the
  // upper half is iterated; the rest follows from symmetry.
  for (int i = 1; i <= n / 2; ++i)
  {
    double x = std::cos(std::numbers::pi * i / n);
    bool converged = false;
    for (int it = 0; it < kNewtonMaxIterations; ++it)
    {
      const auto [p, dp, d2p] = legendre_with_second(n, x);
      (void)p;
      const double dx = dp / d2p;
      x -= dx;
      if (std::abs(dx) <= kNewtonTolerance)
      {
        converged = true;
        break;
      }
    }
    if (!converged)
    {
      // Newton can bounce at the 1-ulp level; accept if the residual is at round-off.
      const auto [p, dp] = legendre(n, x);
      (void)p;
      if (std::abs(dp) > 1e-12 * n * n)
        throw NonConvergence("GLL root " + std::to_string(i) + " of degree " +
                             std::to_string(n) + " did not converge");
    }
    basis.nodes[n - i] = x;
    basis.nodes[i] = -x;
  }
  if (n % 2 == 0)
    basis.nodes[n / 2] = 0.0;

  const double scale = 2.0 / (n * (n + 1.0));
  for (int i = 0; i <= n; ++i)
  {
    const double p = legendre(n, basis.nodes[i]).value;
    basis.weights[i] = scale / (p * p);
  }
  return basis;
}

const ReferenceBasis &gll_basis(int n)
{
  static const std::array<ReferenceBasis, kMaxDegree + 1> cache = []
  {
    std::array<ReferenceBasis, kMaxDegree + 1> rules;
    for (int k = 1; k <= kMaxDegree; ++k)
      rules[k] = gll_rule(k);
    return rules;
  }();
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("GLL degree must lie in [1, " + std::to_string(kMaxDegree) +
                                "], got " + std::to_string(n));
  return cache[n];
}

ShapeValues shape_functions(const ReferenceBasis &basis, double eta)
{
  const int count = basis.size();
  const auto &x = basis.nodes;
  ShapeValues out;
  out.N.assign(count, 1.0);
  out.dN.assign(count, 0.0);
  for (int i = 0; i < count; ++i)
  {
    double value = 1.0;
    double derivative = 0.0;
    for (int j = 0; j < count; ++j)
    {
      if (j == i)
        continue;
      const double denom = x[i] - x[j];
      // Product rule: d(value * t)/deta with t = (eta - x_j) / denom.
      derivative = derivative * (eta - x[j]) / denom + value / denom;
      value *= (eta - x[j]) / denom;
    }
    out.N[i] = value;
    out.dN[i] = derivative;
  }
  return out;
}

QuadratureRule gauss_legendre(int npoints)
{
  if (npoints < 1)
    throw std::invalid_argument("Gauss-Legendre rule needs at least one point");
  QuadratureRule rule;
  rule.points.assign(npoints, 0.0);
  rule.weights.assign(npoints, 0.0);
  for (int i = 0; i < (npoints + 1) / 2; ++i)
  {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (npoints + 0.5));
    double dp = 1.0;
    for (int it = 0; it < kNewtonMaxIterations; ++it)
    {
      const auto value = legendre(npoints, x);
      dp = value.derivative;
      const double dx = value.value / dp;
      x -= dx;
      if (std::abs(dx) <= kNewtonTolerance)
        break;
    }
    dp = legendre(npoints, x).derivative;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.points[i] = -x;
    rule.points[npoints - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[npoints - 1 - i] = w;
  }
  if (npoints % 2 == 1)
    rule.points[npoints / 2] = 0.0;
  return rule;
}

}  // namespace sbfd
