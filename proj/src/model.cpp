// SPDX-License-Identifier: Apache-2.0

#include "sbfd/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace sbfd
{

double Model::longest_radial_distance() const
{
  double out = 0.0;
  for (const auto &s : subdomains)
  {
    double reach = 0.0;
    for (const auto &e : s.elements)
      for (const auto &p : e.coords)
        reach = std::max(reach, (p - s.center).norm());
    out = std::max(out, std::abs(s.radial.end - s.radial.start) * reach);
  }
  return out;
}

double Model::longest_element_length() const
{
  double out = 0.0;
  auto visit = [&out](const BoundaryElement &e) {
    const auto rule = gauss_legendre(e.degree() + 2);
    double length = 0.0;
    for (std::size_t q = 0; q < rule.points.size(); ++q)
      length += rule.weights[q] * boundary_tangent(e, rule.points[q]).norm();
    out = std::max(out, length);
  };
  for (const auto &s : subdomains)
    for (const auto &e : s.elements)
      visit(e);
  return out;
}

Model make_model(const MeshDescription &mesh)
{
  std::map<int, Point> vertices;
  for (const auto &v : mesh.vertices)
    if (!vertices.emplace(v.id, v.position).second)
      throw std::invalid_argument("vertex id " + std::to_string(v.id) + " defined twice");
  if (vertices.empty())
    throw std::invalid_argument("mesh has no vertices");

  // Interior GLL nodes of element k get consecutive ids after every vertex id, in the
  // order the elements are listed.
  int next_id = vertices.rbegin()->first + 1;
  std::map<int, BoundaryElement> elements;
  for (const auto &e : mesh.elements)
  {
    const auto a = vertices.find(e.first);
    const auto b = vertices.find(e.last);
    if (a == vertices.end() || b == vertices.end())
      throw std::invalid_argument("element " + std::to_string(e.id) +
                                  " references an unknown vertex");
    if (e.first == e.last)
      throw std::invalid_argument("element " + std::to_string(e.id) + " is degenerate");
    if (e.degree < 1 || e.degree > kMaxDegree)
      throw std::invalid_argument("element " + std::to_string(e.id) + " degree out of range");
    auto element = straight_element(e.first, a->second, e.last, b->second, e.degree, next_id);
    next_id += e.degree - 1;
    if (!elements.emplace(e.id, std::move(element)).second)
      throw std::invalid_argument("element id " + std::to_string(e.id) + " defined twice");
  }
  auto element_of = [&elements](int id) -> const BoundaryElement & {
    const auto it = elements.find(id);
    if (it == elements.end())
      throw std::invalid_argument("unknown element id " + std::to_string(id));
    return it->second;
  };

  Model model;
  model.symmetry_plane_x = mesh.symmetry_plane_x;
  for (const auto &d : mesh.subdomains)
  {
    Subdomain s;
    s.name = d.name;
    s.kind = d.kind;
    s.material = d.material;
    s.radial = d.radial;
    s.damping = d.damping;
    for (int id : d.elements)
      s.elements.push_back(element_of(id));
    if (s.elements.empty())
      throw std::invalid_argument("subdomain '" + d.name + "' has no elements");
    if (d.center)
      s.center = *d.center;
    else
    {
      if (d.kind != SubdomainKind::bounded)
        throw std::invalid_argument("unbounded subdomain '" + d.name +
                                    "' needs an explicit scaling centre");
      s.center = loop_centroid(s.elements);
      if (!std::isfinite(s.center.x()) || !std::isfinite(s.center.y()))
        throw std::invalid_argument("subdomain '" + d.name + "' encloses no area");
    }
    for (auto &e : s.elements)
    {
      const Point r = boundary_point(e, 0.0) - s.center;
      const Point t = boundary_tangent(e, 0.0);
      if (r.x() * t.y() - r.y() * t.x() < 0.0)
        e = reversed(e);
    }
    validate_subdomain(s);
    model.subdomains.push_back(std::move(s));
  }
  for (int id : mesh.surface)
    model.surface.push_back(element_of(id));
  return model;
}

MeshDescription halfspace_mesh(const HalfspaceMesh &h)
{
  if (!(h.size > 0.0) || h.segments < 1 || h.degree < 1)
    throw std::invalid_argument("half-space mesh needs positive size, segments and degree");
  const double L = h.size;
  const int m = h.segments;

  // Vertices counter-clockwise around the square starting at the surface corner (0, 0):
  // down the symmetry edge, along the bottom, up the right edge, back along the surface.
  MeshDescription mesh;
  std::vector<Point> corners{{0.0, 0.0}, {0.0, -L}, {L, -L}, {L, 0.0}};
  for (int side = 0; side < 4; ++side)
    for (int k = 0; k < m; ++k)
    {
      const double t = static_cast<double>(k) / m;
      mesh.vertices.push_back(
        {side * m + k, Point((1.0 - t) * corners[side] + t * corners[(side + 1) % 4])});
    }
  const int count = 4 * m;
  for (int k = 0; k < count; ++k)
    mesh.elements.push_back({k, k, (k + 1) % count, h.degree});

  MeshSubdomain bounded;
  bounded.name = "bounded";
  bounded.kind = SubdomainKind::bounded;
  bounded.center = Point(0.5 * L, -0.5 * L);
  bounded.material = h.material;
  bounded.radial = {h.bounded_start, 1.0, h.radial_steps};
  bounded.damping = DampingProfile::constant(h.material.damping_ratio);
  for (int k = 0; k < count; ++k)
    bounded.elements.push_back(k);
  mesh.subdomains.push_back(bounded);

  MeshSubdomain u;
  u.kind = SubdomainKind::unbounded;
  u.center = Point::Zero();
  u.material = h.material;
  u.radial = {h.unbounded_start, 1.0, h.radial_steps};
  u.damping = h.unbounded_damping;
  if (h.split_unbounded)
    for (int k = m; k < 3 * m; ++k)
    {
      u.name = (k < 2 * m ? "bottom-" : "right-") + std::to_string(k % m);
      u.elements = {k};
      mesh.subdomains.push_back(u);
    }
  else
  {
    u.name = "unbounded";
    for (int k = m; k < 3 * m; ++k)
      u.elements.push_back(k);
    mesh.subdomains.push_back(u);
  }
  for (int k = 3 * m; k < count; ++k)
    mesh.surface.push_back(k);
  mesh.symmetry_plane_x = 0.0;
  return mesh;
}

}  // namespace sbfd
