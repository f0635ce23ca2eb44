// SPDX-License-Identifier: Apache-2.0

#ifndef SBFD_MODEL_HPP
#define SBFD_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "sbfd/subdomain.hpp"

namespace sbfd
{

// Mesh as written in a configuration file: straight elements between vertex ids,
// with GLL interior nodes generated on construction.
struct MeshVertex
{
  int id = 0;
  Point position = Point::Zero();
};

struct MeshElement
{
  int id = 0;
  int first = 0;
  int last = 0;
  int degree = 1;
};

struct MeshSubdomain
{
  std::string name;
  SubdomainKind kind = SubdomainKind::bounded;
  std::optional<Point> center;  // area centroid of a closed bounded loop when absent
  std::vector<int> elements;
  Material material;
  RadialGrid radial;
  DampingProfile damping;
};

struct MeshDescription
{
  std::vector<MeshVertex> vertices;
  std::vector<MeshElement> elements;
  std::vector<MeshSubdomain> subdomains;
  std::vector<int> surface;  // element ids that may carry the strip load
  std::optional<double> symmetry_plane_x;
};

struct Model
{
  std::vector<Subdomain> subdomains;
  std::vector<BoundaryElement> surface;
  std::optional<double> symmetry_plane_x;

  // Largest |end - start| times the farthest boundary point from the scaling centre.
  double longest_radial_distance() const;
  double longest_element_length() const;
};

// Generates interior node ids above the largest vertex id, orients every element so
// its Jacobian is positive about the subdomain's centre and validates the result.
// Throws std::invalid_argument for unresolved ids, plus the geometry errors of
// validate_subdomain.
Model make_model(const MeshDescription &mesh);

//
// Quarter-plane half-space model x >= 0, y <= 0: a bounded L x L square ([0, L] x
// [-L, 0]) with `segments` elements per edge and its scaling centre at the centroid,
// plus the unbounded exterior beyond the bottom and right edges, scaled from (0, 0)
// so its side rays follow the free surface and the symmetry plane x = 0. The exterior
// is one subdomain over all its edge elements, or with `split_unbounded` one subdomain
// per element; split subdomains touch only at their shared boundary nodes, leaving a
// traction-free slit along every shared ray.
//
struct HalfspaceMesh
{
  double size = 96.0;
  int segments = 4;
  int degree = 9;
  Material material;
  int radial_steps = 100;
  double bounded_start = kDefaultBoundedStart;
  double unbounded_start = kDefaultUnboundedStart;
  DampingProfile unbounded_damping = DampingProfile::linear(1.0, 0.05);
  bool split_unbounded = false;
};

MeshDescription halfspace_mesh(const HalfspaceMesh &h);

}  // namespace sbfd

#endif  // SBFD_MODEL_HPP
