// SPDX-License-Identifier: Apache-2.0

#include "sbfd/global.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "sbfd/errors.hpp"

namespace sbfd
{

int GlobalSystem::dof(int node_id, int component) const
{
  const auto it = std::lower_bound(node_ids.begin(), node_ids.end(), node_id);
  if (it == node_ids.end() || *it != node_id)
    throw std::out_of_range("node " + std::to_string(node_id) + " is not in the global system");
  return kDofsPerNode * static_cast<int>(it - node_ids.begin()) + component;
}

std::vector<int> GlobalSystem::free_dofs() const
{
  std::vector<int> out;
  out.reserve(size() - constrained.size());
  auto c = constrained.begin();
  for (int d = 0; d < size(); ++d)
  {
    if (c != constrained.end() && *c == d)
      ++c;
    else
      out.push_back(d);
  }
  return out;
}

GlobalSystem assemble_global(std::span<const Subdomain> subdomains,
                             std::span<const RadialCondensation> condensations)
{
  if (subdomains.size() != condensations.size())
    throw std::invalid_argument("one condensation per subdomain is required");
  if (subdomains.empty())
    throw std::invalid_argument("no subdomains to assemble");

  GlobalSystem g;
  g.omega = condensations.front().omega;
  for (const auto &c : condensations)
    if (c.omega != g.omega)
      throw InconsistentFrequency("condensations at omega " + std::to_string(g.omega) +
                                  " and " + std::to_string(c.omega) + " rad/s");

  // Node coordinates from every element; shared ids must agree in position.
  std::map<int, Point> coords;
  double extent = 0.0;
  for (const auto &s : subdomains)
    for (const auto &e : s.elements)
      for (std::size_t k = 0; k < e.node_ids.size(); ++k)
        extent = std::max(extent, e.coords[k].cwiseAbs().maxCoeff());
  const double tol = 1e-9 * std::max(extent, 1.0);
  for (const auto &s : subdomains)
    for (const auto &e : s.elements)
      for (std::size_t k = 0; k < e.node_ids.size(); ++k)
      {
        const auto [it, inserted] = coords.emplace(e.node_ids[k], e.coords[k]);
        if (!inserted && (it->second - e.coords[k]).norm() > tol)
          throw UnmatchedInterfaceNodes("node " + std::to_string(e.node_ids[k]) +
                                        " has different coordinates in subdomain '" +
                                        s.name + "'");
      }
  for (const auto &[id, p] : coords)
  {
    g.node_ids.push_back(id);
    g.node_coords.push_back(p);
  }

  const int N = kDofsPerNode * g.node_count();
  g.stiffness = ComplexMatrix::Zero(N, N);
  g.load = ComplexVector::Zero(N);
  for (std::size_t k = 0; k < subdomains.size(); ++k)
  {
    const DofMap map = dof_map(subdomains[k]);
    const auto &S = condensations[k].stiffness;
    if (S.rows() != map.size() || S.cols() != map.size())
      throw UnmatchedInterfaceNodes("condensed stiffness of subdomain '" + subdomains[k].name +
                                    "' is " + std::to_string(S.rows()) + " x " +
                                    std::to_string(S.cols()) + ", expected " +
                                    std::to_string(map.size()));
    std::vector<int> to_global(map.size());
    for (int a = 0; a < map.size(); ++a)
      to_global[a] = g.dof(map.node_of(a), map.component_of(a));
    for (int b = 0; b < map.size(); ++b)
      for (int a = 0; a < map.size(); ++a)
        g.stiffness(to_global[a], to_global[b]) += S(a, b);
    g.scatter.push_back(std::move(to_global));
  }
  return g;
}

namespace
{

// Parameter at which a straight surface element reaches abscissa x (bisection on
// the isoparametric map, which is monotone along the element).
double eta_at(const BoundaryElement &e, double x)
{
  double lo = -1.0;
  double hi = 1.0;
  const bool increasing = boundary_point(e, 1.0).x() > boundary_point(e, -1.0).x();
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it)
  {
    const double mid = 0.5 * (lo + hi);
    if ((boundary_point(e, mid).x() < x) == increasing)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ComplexVector strip_load_vector(const GlobalSystem &system, const LoadCase &load)
{
  if (!std::isfinite(load.pressure))
    throw std::invalid_argument("strip pressure must be finite");
  if (!(load.half_width > 0.0))
    throw std::invalid_argument("strip half-width must be positive");
  if (load.elements.empty())
    throw LoadOutsideMesh("no loaded surface elements");

  const double b = load.half_width;
  ComplexVector f = ComplexVector::Zero(system.size());
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double covered = 0.0;
  for (const auto &e : load.elements)
  {
    const double xa = boundary_point(e, -1.0).x();
    const double xb = boundary_point(e, 1.0).x();
    const double length = std::abs(xb - xa);
    const double tol = 1e-9 * std::max(length, 1.0);
    for (std::size_t k = 0; k < e.coords.size(); ++k)
    {
      if (std::abs(e.coords[k].y()) > tol)
        throw LoadOutsideMesh("loaded element node " + std::to_string(e.node_ids[k]) +
                              " is not on the surface y = 0");
      if (!std::binary_search(system.node_ids.begin(), system.node_ids.end(), e.node_ids[k]))
        throw LoadOutsideMesh("loaded element node " + std::to_string(e.node_ids[k]) +
                              " is not part of the mesh");
    }
    xmin = std::min({xmin, xa, xb});
    xmax = std::max({xmax, xa, xb});

    const double lo = std::max(std::min(xa, xb), -b);
    const double hi = std::min(std::max(xa, xb), b);
    if (hi - lo <= 0.0)
      continue;
    covered += hi - lo;
    double ea = eta_at(e, lo);
    double eb = eta_at(e, hi);
    if (ea > eb)
      std::swap(ea, eb);
    const auto rule = gauss_legendre(e.degree() + 2);
    const double half = 0.5 * (eb - ea);
    for (std::size_t q = 0; q < rule.points.size(); ++q)
    {
      const double eta = ea + half * (rule.points[q] + 1.0);
      const auto shape = shape_functions(e.basis(), eta);
      const double jac = boundary_tangent(e, eta).norm();
      const double w = rule.weights[q] * half * jac;
      for (std::size_t k = 0; k < e.node_ids.size(); ++k)
        f[system.dof(e.node_ids[k], 1)] -= load.pressure * shape.N[k] * w;
    }
  }

  const double tol = 1e-9 * std::max(xmax - xmin, 1.0);
  // The strip must be covered whole, or from its centre line on a half model that
  // lies on either side of x = 0.
  const bool right = b <= xmax + tol;
  const bool left = xmin <= -b + tol;
  const bool half_right = right && std::abs(xmin) <= tol;
  const bool half_left = left && std::abs(xmax) <= tol;
  if (!((left && right) || half_right || half_left))
    throw LoadOutsideMesh("strip |x| <= " + std::to_string(b) +
                          " reaches past the loaded elements");
  const double expected = std::min(b, xmax) - std::max(-b, xmin);
  if (covered < expected - tol)
    throw LoadOutsideMesh("loaded elements leave gaps inside the strip");
  return f;
}

GlobalSystem apply_symmetry_constraints(GlobalSystem system, double plane_x, double tolerance)
{
  std::vector<int> fixed = system.constrained;
  for (int k = 0; k < system.node_count(); ++k)
    if (std::abs(system.node_coords[k].x() - plane_x) < tolerance)
      fixed.push_back(kDofsPerNode * k);
  std::sort(fixed.begin(), fixed.end());
  fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
  system.constrained = std::move(fixed);
  return system;
}

ComplexVector solve(const GlobalSystem &system)
{
  const int N = system.size();
  if (system.load.size() != N)
    throw std::invalid_argument("load vector length does not match the system");
  const auto free = system.free_dofs();
  const int nf = static_cast<int>(free.size());
  ComplexMatrix A(nf, nf);
  ComplexVector f(nf);
  for (int j = 0; j < nf; ++j)
  {
    f[j] = system.load[free[j]];
    for (int i = 0; i < nf; ++i)
      A(i, j) = system.stiffness(free[i], free[j]);
  }

  ComplexVector u = ComplexVector::Zero(N);
  if (nf == 0)
    return u;
  Eigen::PartialPivLU<ComplexMatrix> lu(A);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-15))
    throw SingularGlobalMatrix("global dynamic stiffness is singular (reciprocal condition " +
                               detail::scientific(rcond) + ")");
  const double fnorm = f.norm();
  if (fnorm == 0.0)
    return u;
  const ComplexVector x = lu.solve(f);
  const double residual = (A * x - f).norm() / fnorm;
  if (!(residual < kMaxSolveResidual))
    throw SingularGlobalMatrix("global solve residual " + detail::scientific(residual) +
                               " exceeds tolerance");
  for (int j = 0; j < nf; ++j)
    u[free[j]] = x[j];
  return u;
}

ComplexVector gather(const GlobalSystem &system, int subdomain, const ComplexVector &u)
{
  const auto &map = system.scatter.at(subdomain);
  ComplexVector out(map.size());
  for (std::size_t a = 0; a < map.size(); ++a)
    out[a] = u[map[a]];
  return out;
}

}  // namespace sbfd
