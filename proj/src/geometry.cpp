// SPDX-License-Identifier: Apache-2.0

#include "sbfd/geometry.hpp"

#include <cmath>
#include <numbers>

#include "sbfd/errors.hpp"

namespace sbfd
{

BoundaryElement straight_element(int id_a, const Point &a, int id_b, const Point &b,
                                 int degree, int first_interior_id)
{
  const auto &basis = gll_basis(degree);
  BoundaryElement element;
  element.node_ids.reserve(degree + 1);
  element.coords.reserve(degree + 1);
  for (int k = 0; k <= degree; ++k)
  {
    const double t = 0.5 * (basis.nodes[k] + 1.0);
    if (k == 0)
      element.node_ids.push_back(id_a);
    else if (k == degree)
      element.node_ids.push_back(id_b);
    else
      element.node_ids.push_back(first_interior_id + k - 1);
    element.coords.push_back(k == 0 ? a : k == degree ? b : Point((1.0 - t) * a + t * b));
  }
  return element;
}

BoundaryElement reversed(const BoundaryElement &element)
{
  BoundaryElement out;
  out.node_ids.assign(element.node_ids.rbegin(), element.node_ids.rend());
  out.coords.assign(element.coords.rbegin(), element.coords.rend());
  return out;
}

Point boundary_point(const BoundaryElement &element, double eta)
{
  const auto shape = shape_functions(element.basis(), eta);
  Point p = Point::Zero();
  for (std::size_t k = 0; k < element.coords.size(); ++k)
    p += shape.N[k] * element.coords[k];
  return p;
}

Point boundary_tangent(const BoundaryElement &element, double eta)
{
  const auto shape = shape_functions(element.basis(), eta);
  Point t = Point::Zero();
  for (std::size_t k = 0; k < element.coords.size(); ++k)
    t += shape.dN[k] * element.coords[k];
  return t;
}

Point map_point(const Point &center, const BoundaryElement &element, double xi, double eta)
{
  return center + xi * (boundary_point(element, eta) - center);
}

namespace
{

JacobianData jacobian_from(const Point &radial, const Point &tangent, double eta)
{
  const double det = radial.x() * tangent.y() - radial.y() * tangent.x();
  if (!(det > 0.0))
    throw NonPositiveJacobian(det, eta);
  return {tangent.y() / det, -radial.y() / det, -tangent.x() / det, radial.x() / det, det};
}

}  // namespace

JacobianData jacobian(const Point &center, const BoundaryElement &element, double eta)
{
  return jacobian_from(boundary_point(element, eta) - center, boundary_tangent(element, eta),
                       eta);
}

StrainBlocks strain_blocks(const Point &center, const BoundaryElement &element, double eta)
{
  const auto shape = shape_functions(element.basis(), eta);
  Point p = Point::Zero();
  Point t = Point::Zero();
  for (std::size_t k = 0; k < element.coords.size(); ++k)
  {
    p += shape.N[k] * element.coords[k];
    t += shape.dN[k] * element.coords[k];
  }
  StrainBlocks out;
  out.jac = jacobian_from(p - center, t, eta);
  const auto &j = out.jac;
  const int cols = kDofsPerNode * static_cast<int>(element.coords.size());
  out.B1.setZero(3, cols);
  out.B2.setZero(3, cols);
  for (std::size_t k = 0; k < element.coords.size(); ++k)
  {
    const int c = kDofsPerNode * static_cast<int>(k);
    const double n = shape.N[k];
    const double dn = shape.dN[k];
    out.B1(0, c) = j.j11 * n;
    out.B1(1, c + 1) = j.j21 * n;
    out.B1(2, c) = j.j21 * n;
    out.B1(2, c + 1) = j.j11 * n;
    out.B2(0, c) = j.j12 * dn;
    out.B2(1, c + 1) = j.j22 * dn;
    out.B2(2, c) = j.j22 * dn;
    out.B2(2, c + 1) = j.j12 * dn;
  }
  out.N = shape.N;
  return out;
}

bool star_convex(const Point &center, std::span<const BoundaryElement> elements,
                 int samples_per_element)
{
  // Per element the sampled angle must move one way only; over the whole chain the
  // swept angle may not exceed one turn. Independent of element listing order.
  double total = 0.0;
  int sign = 0;
  for (const auto &element : elements)
  {
    double previous = 0.0;
    for (int s = 0; s <= samples_per_element; ++s)
    {
      const double eta = -1.0 + 2.0 * s / samples_per_element;
      const Point r = boundary_point(element, eta) - center;
      if (r.norm() == 0.0)
        return false;
      const double angle = std::atan2(r.y(), r.x());
      if (s > 0)
      {
        double d = angle - previous;
        if (d > std::numbers::pi)
          d -= 2.0 * std::numbers::pi;
        else if (d < -std::numbers::pi)
          d += 2.0 * std::numbers::pi;
        const int direction = d > 0 ? 1 : -1;
        if (d == 0.0 || (sign != 0 && direction != sign))
          return false;
        sign = direction;
        total += d;
      }
      previous = angle;
    }
  }
  return std::abs(total) <= 2.0 * std::numbers::pi * (1.0 + 1e-9);
}

Point loop_centroid(std::span<const BoundaryElement> elements)
{
  double area = 0.0;
  double mx = 0.0;
  double my = 0.0;
  for (const auto &element : elements)
  {
    const auto rule = gauss_legendre(element.degree() + 2);
    for (std::size_t q = 0; q < rule.points.size(); ++q)
    {
      const Point p = boundary_point(element, rule.points[q]);
      const Point t = boundary_tangent(element, rule.points[q]);
      const double w = rule.weights[q];
      area += 0.5 * (p.x() * t.y() - p.y() * t.x()) * w;
      mx += 0.5 * p.x() * p.x() * t.y() * w;
      my -= 0.5 * p.y() * p.y() * t.x() * w;
    }
  }
  return Point(mx / area, my / area);
}

}  // namespace sbfd
